#include "geocrystal/cartan.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace geocrystal {

namespace {

void check_rank(int n) {
  require(n >= 2, ErrorKind::InvalidRank, "rank parameter n must be >= 2, got " + std::to_string(n));
}

void check_vertex(int n, int k) {
  require(k >= 1 && k <= n - 1, ErrorKind::OutOfRange,
          "vertex " + std::to_string(k) + " outside 1.." + std::to_string(n - 1));
}

IntVec to_vec(std::initializer_list<int> coords) {
  IntVec out(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (int c : coords) out(i++) = c;
  return out;
}

}  // namespace

IntMat cartan_matrix(int n) {
  check_rank(n);
  const int r = n - 1;
  IntMat c = IntMat::Zero(r, r);
  for (int k = 0; k < r; ++k) {
    c(k, k) = 2;
    if (k + 1 < r) c(k, k + 1) = c(k + 1, k) = -1;
  }
  return c;
}

Weight::Weight(IntVec omega_coords) : omega_(std::move(omega_coords)) {
  check_rank(rank());
}

Weight Weight::fundamental(int n, int k) {
  check_rank(n);
  check_vertex(n, k);
  IntVec c = IntVec::Zero(n - 1);
  c(k - 1) = 1;
  return Weight(c);
}

Weight Weight::simple_root(int n, int k) {
  check_vertex(n, k);
  return Weight(IntVec(cartan_matrix(n).col(k - 1)));
}

Weight Weight::from_eps(std::span<const int> eps) {
  const int n = static_cast<int>(eps.size());
  check_rank(n);
  IntVec c(n - 1);
  for (int k = 0; k < n - 1; ++k) c(k) = eps[static_cast<std::size_t>(k)] - eps[static_cast<std::size_t>(k) + 1];
  return Weight(c);
}

std::vector<int> Weight::eps() const {
  const int n = rank();
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  for (int i = n - 2; i >= 0; --i) e[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i) + 1] + omega_(i);
  return e;
}

bool Weight::is_dominant() const { return (omega_.array() >= 0).all(); }

Weight Weight::operator+(const Weight& other) const {
  require(rank() == other.rank(), ErrorKind::DimensionMismatch, "weight rank mismatch");
  return Weight(IntVec(omega_ + other.omega_));
}

Weight Weight::operator-(const Weight& other) const {
  require(rank() == other.rank(), ErrorKind::DimensionMismatch, "weight rank mismatch");
  return Weight(IntVec(omega_ - other.omega_));
}

Weight Weight::operator*(int scalar) const { return Weight(IntVec(omega_ * scalar)); }

int pair_with_coroot(const Weight& mu, int k) {
  check_vertex(mu.rank(), k);
  return mu.omega()(k - 1);
}

HighestWeight::HighestWeight(IntVec coords) : w(std::move(coords)) {
  check_rank(rank());
  require((w.array() >= 0).all(), ErrorKind::Precondition, "highest weight has a negative entry");
}

HighestWeight::HighestWeight(std::initializer_list<int> coords) : HighestWeight(to_vec(coords)) {}

int HighestWeight::degree() const {
  int d = 0;
  for (Eigen::Index k = 0; k < w.size(); ++k) d += static_cast<int>(k + 1) * w(k);
  return d;
}

DimVec::DimVec(IntVec coords) : v(std::move(coords)) {
  check_rank(rank());
  require((v.array() >= 0).all(), ErrorKind::Precondition, "dimension vector has a negative entry");
}

DimVec::DimVec(std::initializer_list<int> coords) : DimVec(to_vec(coords)) {}

DimVec DimVec::unit(int n, int k) {
  check_rank(n);
  check_vertex(n, k);
  IntVec e = IntVec::Zero(n - 1);
  e(k - 1) = 1;
  return DimVec(e);
}

Weight weight_of(const HighestWeight& w, const DimVec& v) {
  require(w.rank() == v.rank(), ErrorKind::DimensionMismatch, "v and w have different ranks");
  return Weight(IntVec(w.w - cartan_matrix(w.rank()) * v.v));
}

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
  require(!parts.empty(), ErrorKind::InvalidRank, "composition needs at least one part");
  require(std::all_of(parts.begin(), parts.end(), [](int x) { return x >= 0; }),
          ErrorKind::Precondition, "composition has a negative part");
}

Composition::Composition(std::initializer_list<int> p) : Composition(std::vector<int>(p)) {}

int Composition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Weight Composition::weight() const { return Weight::from_eps(parts); }

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    require(parts[i] > 0, ErrorKind::Precondition, "partition parts must be positive");
    require(i == 0 || parts[i] <= parts[i - 1], ErrorKind::Precondition,
            "partition parts must be weakly decreasing");
  }
}

Partition::Partition(std::initializer_list<int> p) : Partition(std::vector<int>(p)) {}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> out;
  if (parts.empty()) return Partition();
  for (int col = 1; col <= parts.front(); ++col) {
    int count = 0;
    for (int p : parts)
      if (p >= col) ++count;
    out.push_back(count);
  }
  return Partition(out);
}

bool dominates(const Partition& lambda, const Partition& mu) {
  require(lambda.size() == mu.size(), ErrorKind::Incompatible, "dominance needs equal sizes");
  int a = 0;
  int b = 0;
  const std::size_t len = std::max(lambda.parts.size(), mu.parts.size());
  for (std::size_t i = 0; i < len; ++i) {
    a += i < lambda.parts.size() ? lambda.parts[i] : 0;
    b += i < mu.parts.size() ? mu.parts[i] : 0;
    if (a < b) return false;
  }
  return true;
}

Partition hw_to_partition(const HighestWeight& w) {
  std::vector<int> parts;
  int running = 0;
  for (Eigen::Index k = w.w.size() - 1; k >= 0; --k) {
    running += w.w(k);
    parts.push_back(running);
  }
  std::reverse(parts.begin(), parts.end());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(parts);
}

bool is_partition_of(const HighestWeight& w, int d) { return w.degree() == d; }

bool occurs_in_tensor_power(const HighestWeight& w, int d) {
  const int size = w.degree();
  return d >= size && (d - size) % w.rank() == 0;
}

HighestWeight partition_to_hw(const Partition& lambda, int n) {
  check_rank(n);
  require(lambda.length() <= n, ErrorKind::OutOfRange, "partition has more than n rows");
  IntVec w = IntVec::Zero(n - 1);
  auto part = [&](int i) { return i < lambda.length() ? lambda.parts[static_cast<std::size_t>(i)] : 0; };
  for (int k = 0; k < n - 1; ++k) w(k) = part(k) - part(k + 1);
  return HighestWeight(w);
}

std::optional<Composition> comp_shift(const Composition& d, int k, Shift sign) {
  check_rank(d.n());
  check_vertex(d.n(), k);
  std::vector<int> parts = d.parts;
  const int delta = sign == Shift::Plus ? 1 : -1;
  parts[static_cast<std::size_t>(k - 1)] += delta;
  parts[static_cast<std::size_t>(k)] -= delta;
  if (parts[static_cast<std::size_t>(k - 1)] < 0 || parts[static_cast<std::size_t>(k)] < 0)
    return std::nullopt;
  return Composition(parts);
}

std::optional<Composition> try_a_of_vw(const DimVec& v, const HighestWeight& w) {
  require(v.rank() == w.rank(), ErrorKind::DimensionMismatch, "v and w have different ranks");
  const int n = w.rank();
  std::vector<int> a(static_cast<std::size_t>(n));
  int tail = 0;  // w_k + ... + w_{n-1}
  std::vector<int> tails(static_cast<std::size_t>(n), 0);
  for (int k = n - 1; k >= 1; --k) {
    tail += w[k];
    tails[static_cast<std::size_t>(k - 1)] = tail;
  }
  for (int k = 1; k <= n; ++k) {
    const int vk = k <= n - 1 ? v[k] : 0;
    const int vprev = k >= 2 ? v[k - 1] : 0;
    const int tk = k <= n - 1 ? tails[static_cast<std::size_t>(k - 1)] : 0;
    a[static_cast<std::size_t>(k - 1)] = tk - vk + vprev;
  }
  if (std::any_of(a.begin(), a.end(), [](int x) { return x < 0; })) return std::nullopt;
  return Composition(a);
}

Composition a_of_vw(const DimVec& v, const HighestWeight& w) {
  auto a = try_a_of_vw(v, w);
  require(a.has_value(), ErrorKind::NotInImage, "a(v,w) has a negative part");
  return *a;
}

DimVec v_of_aw(const Composition& a, const HighestWeight& w) {
  const int n = w.rank();
  require(a.n() == n, ErrorKind::DimensionMismatch, "composition has the wrong number of parts");
  require(a.total() == w.degree(), ErrorKind::Incompatible,
          "sum of a is " + std::to_string(a.total()) + " but sum k w_k is " + std::to_string(w.degree()));
  // a_n = v_{n-1}; a_k = t_k - v_k + v_{k-1} solved upward for v_{k-1}.
  IntVec v = IntVec::Zero(n - 1);
  v(n - 2) = a[n];
  int tail = 0;
  for (int k = n - 1; k >= 2; --k) {
    tail += w[k];
    v(k - 2) = a[k] - tail + v(k - 1);
  }
  require((v.array() >= 0).all(), ErrorKind::NotInImage, "solved dimension vector has a negative entry");
  return DimVec(v);
}

Partition jordan_type(const Composition& d) {
  std::vector<int> alpha = d.parts;
  std::sort(alpha.begin(), alpha.end(), std::greater<>());
  const int n = static_cast<int>(alpha.size());
  std::vector<int> parts;
  for (int i = n; i >= 1; --i) {
    const int next = i < n ? alpha[static_cast<std::size_t>(i)] : 0;
    const int count = alpha[static_cast<std::size_t>(i - 1)] - next;
    for (int c = 0; c < count; ++c) parts.push_back(i);
  }
  return Partition(parts);
}

std::vector<Composition> compositions(int d, int n) {
  require(n >= 1, ErrorKind::InvalidRank, "compositions need at least one part");
  std::vector<Composition> out;
  std::vector<int> parts(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> fill = [&](int pos, int remaining) {
    if (pos == n - 1) {
      parts[static_cast<std::size_t>(pos)] = remaining;
      out.emplace_back(parts);
      return;
    }
    for (int x = remaining; x >= 0; --x) {
      parts[static_cast<std::size_t>(pos)] = x;
      fill(pos + 1, remaining - x);
    }
  };
  fill(0, d);
  return out;
}

std::vector<Partition> partitions(int d, int max_parts) {
  std::vector<Partition> out;
  std::vector<int> parts;
  std::function<void(int, int)> fill = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    if (static_cast<int>(parts.size()) == max_parts) return;
    for (int x = std::min(remaining, cap); x >= 1; --x) {
      parts.push_back(x);
      fill(remaining - x, x);
      parts.pop_back();
    }
  };
  fill(d, d);
  return out;
}

}  // namespace geocrystal
