#include "asmtspp/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace asmtspp {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts must weakly decrease");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::padded(int n) const {
  if (length() > n) throw std::invalid_argument("Partition::padded: " + str() + " has more than " + std::to_string(n) + " parts");
  std::vector<int> out = parts_;
  out.resize(static_cast<std::size_t>(n), 0);
  return out;
}

bool Partition::fits_in_box(int rows, int cols) const {
  return length() <= rows && (parts_.empty() || parts_[0] <= cols);
}

std::string Partition::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

void FrobeniusCoords::validate() const {
  if (arms.size() != legs.size()) throw std::invalid_argument("Frobenius: arms and legs differ in length");
  for (const auto* seq : {&arms, &legs})
    for (std::size_t i = 0; i < seq->size(); ++i) {
      if ((*seq)[i] < 0) throw std::invalid_argument("Frobenius: negative coordinate");
      if (i > 0 && (*seq)[i] >= (*seq)[i - 1]) throw std::invalid_argument("Frobenius: coordinates must strictly decrease");
    }
}

std::string FrobeniusCoords::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < arms.size(); ++i) out += (i ? "," : "") + std::to_string(arms[i]);
  out += "|";
  for (std::size_t i = 0; i < legs.size(); ++i) out += (i ? "," : "") + std::to_string(legs[i]);
  return out + ")";
}

FrobeniusCoords FrobeniusCoords::parse(std::string_view text) {
  auto fail = [&] { throw std::invalid_argument("Frobenius: cannot parse '" + std::string(text) + "'"); };
  if (text.size() < 3 || text.front() != '(' || text.back() != ')') fail();
  auto body = text.substr(1, text.size() - 2);
  auto bar = body.find('|');
  if (bar == std::string_view::npos) fail();
  auto read = [&](std::string_view s) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::size_t start = 0;
    while (true) {
      auto comma = s.find(',', start);
      auto tok = s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) fail();
      out.push_back(std::stoi(std::string(tok)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return out;
  };
  FrobeniusCoords f{read(body.substr(0, bar)), read(body.substr(bar + 1))};
  f.validate();
  return f;
}

Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<int> out(static_cast<std::size_t>(lambda[0]), 0);
  for (int p : lambda.parts())
    for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

int durfee_size(const Partition& lambda) {
  int l = 0;
  while (lambda[static_cast<std::size_t>(l)] >= l + 1) ++l;
  return l;
}

FrobeniusCoords to_frobenius(const Partition& lambda) {
  int l = durfee_size(lambda);
  Partition conj = conjugate(lambda);
  FrobeniusCoords f;
  for (int i = 0; i < l; ++i) {
    f.arms.push_back(lambda[static_cast<std::size_t>(i)] - (i + 1));
    f.legs.push_back(conj[static_cast<std::size_t>(i)] - (i + 1));
  }
  return f;
}

Partition from_frobenius(const FrobeniusCoords& f) {
  f.validate();
  const int l = f.rank();
  if (l == 0) return {};
  // Column heights of the first l columns, then rows below the Durfee square.
  std::vector<int> col(static_cast<std::size_t>(l));
  for (int j = 0; j < l; ++j) col[static_cast<std::size_t>(j)] = f.legs[static_cast<std::size_t>(j)] + j + 1;
  std::vector<int> parts;
  for (int i = 0; i < l; ++i) parts.push_back(f.arms[static_cast<std::size_t>(i)] + i + 1);
  for (int row = l + 1; row <= col[0]; ++row) {
    int len = 0;
    for (int j = 0; j < l; ++j)
      if (col[static_cast<std::size_t>(j)] >= row) ++len;
    parts.push_back(len);
  }
  return Partition(std::move(parts));
}

Partition complement(const Partition& lambda, int n) {
  if (!lambda.fits_in_box(n, n))
    throw std::invalid_argument("complement: " + lambda.str() + " does not fit in a " + std::to_string(n) + "x" + std::to_string(n) + " square");
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(n - 1 - i)] = n - lambda[static_cast<std::size_t>(i)];
  return Partition(std::move(out));
}

bool is_k_tall(const Partition& lambda, int k, int n) {
  if (lambda.length() > n + k - 1) return false;
  if (!lambda.empty() && lambda[0] > n - 1) return false;
  auto f = to_frobenius(lambda);
  for (int i = 0; i < f.rank(); ++i) {
    int b = f.legs[static_cast<std::size_t>(i)] - k;
    if (b < 0 || f.arms[static_cast<std::size_t>(i)] > b) return false;
  }
  return true;
}

DyckPath::DyckPath(std::string word) : word_(std::move(word)) {
  int height = 0;
  for (char c : word_) {
    if (c == 'N') {
      ++height;
    } else if (c == 'E') {
      if (--height < 0) throw std::invalid_argument("DyckPath: prefix with more E than N");
    } else {
      throw std::invalid_argument("DyckPath: steps must be N or E");
    }
  }
  if (height != 0) throw std::invalid_argument("DyckPath: unbalanced word");
}

DyckPath ktall_to_dyck(const Partition& lambda, int k, int n) {
  if (!is_k_tall(lambda, k, n))
    throw std::invalid_argument("ktall_to_dyck: " + lambda.str() + " is not " + std::to_string(k) + "-tall of size " + std::to_string(n));
  auto f = to_frobenius(lambda);
  const int l = f.rank();
  if (l == 0) return DyckPath(std::string(static_cast<std::size_t>(n), 'N') + std::string(static_cast<std::size_t>(n), 'E'));
  std::vector<int> a = f.arms, b = f.legs;
  for (auto& x : b) x -= k;
  std::string w;
  auto put = [&w](char c, int count) { w.append(static_cast<std::size_t>(count), c); };
  put('N', b[static_cast<std::size_t>(l - 1)] + 1);
  put('E', a[static_cast<std::size_t>(l - 1)] + 1);
  for (int i = l - 1; i >= 1; --i) {
    put('N', b[static_cast<std::size_t>(i - 1)] - b[static_cast<std::size_t>(i)]);
    put('E', a[static_cast<std::size_t>(i - 1)] - a[static_cast<std::size_t>(i)]);
  }
  put('N', n - b[0] - 1);
  put('E', n - a[0] - 1);
  return DyckPath(std::move(w));
}

Partition dyck_to_ktall(const DyckPath& path, int k) {
  // Split into maximal N^p E^q runs.
  std::vector<std::pair<int, int>> runs;
  const auto& w = path.word();
  for (std::size_t i = 0; i < w.size();) {
    int p = 0, q = 0;
    while (i < w.size() && w[i] == 'N') ++p, ++i;
    while (i < w.size() && w[i] == 'E') ++q, ++i;
    runs.emplace_back(p, q);
  }
  const int l = static_cast<int>(runs.size()) - 1;
  if (l <= 0) return {};
  std::vector<int> a(static_cast<std::size_t>(l)), b(static_cast<std::size_t>(l));
  a[static_cast<std::size_t>(l - 1)] = runs[0].second - 1;
  b[static_cast<std::size_t>(l - 1)] = runs[0].first - 1;
  for (int i = l - 1; i >= 1; --i) {
    const auto& run = runs[static_cast<std::size_t>(l - i)];
    b[static_cast<std::size_t>(i - 1)] = b[static_cast<std::size_t>(i)] + run.first;
    a[static_cast<std::size_t>(i - 1)] = a[static_cast<std::size_t>(i)] + run.second;
  }
  for (auto& x : b) x += k;
  return from_frobenius({a, b});
}

namespace {

void box_rec(int rows, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  out.emplace_back(cur);
  if (static_cast<int>(cur.size()) == rows) return;
  for (int p = 1; p <= max_part; ++p) {
    cur.push_back(p);
    box_rec(rows, p, cur, out);
    cur.pop_back();
  }
}

void dyck_rec(int n, int up, int down, std::string& cur, std::vector<DyckPath>& out) {
  if (up == n && down == n) {
    out.emplace_back(cur);
    return;
  }
  if (up < n) {
    cur.push_back('N');
    dyck_rec(n, up + 1, down, cur, out);
    cur.pop_back();
  }
  if (down < up) {
    cur.push_back('E');
    dyck_rec(n, up, down + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> cur;
  box_rec(rows, cols, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> k_tall_partitions(int k, int n) {
  std::vector<Partition> out;
  for (auto& p : partitions_in_box(n + k - 1, n - 1))
    if (is_k_tall(p, k, n)) out.push_back(std::move(p));
  return out;
}

std::vector<DyckPath> all_dyck_paths(int n) {
  std::vector<DyckPath> out;
  std::string cur;
  dyck_rec(n, 0, 0, cur, out);
  return out;
}

}  // namespace asmtspp
