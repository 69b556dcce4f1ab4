#include "parind/finite_field.hpp"

#include "parind/padic.hpp"

#include <sstream>
#include <utility>

namespace parind {

int mod_inverse(int a, int q) {
  a %= q;
  if (a < 0) a += q;
  if (a == 0) throw DomainError("mod_inverse: zero has no inverse");
  int t = 0, nt = 1, r = q, nr = a;
  while (nr != 0) {
    const int quot = r / nr;
    t = std::exchange(nt, t - quot * nt);
    r = std::exchange(nr, r - quot * nr);
  }
  return t < 0 ? t + q : t;
}

FFMatrix::FFMatrix(int n, int q) : q_(q), a_(Storage::Zero(n, n)) {
  if (n < 1 || n > 4) throw DomainError("FFMatrix: dimension must be in [1,4]");
  if (!is_prime(q)) throw DomainError("FFMatrix: q must be prime");
}

FFMatrix::FFMatrix(int q, const Storage& entries) : FFMatrix(static_cast<int>(entries.rows()), q) {
  for (int i = 0; i < n(); ++i)
    for (int j = 0; j < n(); ++j) set(i, j, entries(i, j));
}

FFMatrix FFMatrix::identity(int n, int q) {
  FFMatrix m(n, q);
  for (int i = 0; i < n; ++i) m.a_(i, i) = 1;
  return m;
}

void FFMatrix::set(int i, int j, int v) {
  v %= q_;
  a_(i, j) = v < 0 ? v + q_ : v;
}

std::uint64_t FFMatrix::encode() const {
  std::uint64_t code = 0;
  for (int i = 0; i < n(); ++i)
    for (int j = 0; j < n(); ++j) code = code * static_cast<std::uint64_t>(q_) + static_cast<std::uint64_t>(a_(i, j));
  return code;
}

FFMatrix FFMatrix::decode(std::uint64_t code, int n, int q) {
  FFMatrix m(n, q);
  for (int k = n * n - 1; k >= 0; --k) {
    m.a_(k / n, k % n) = static_cast<int>(code % static_cast<std::uint64_t>(q));
    code /= static_cast<std::uint64_t>(q);
  }
  return m;
}

namespace {

// Row reduction mod q; returns (rank, det).
std::pair<int, int> reduce(FFMatrix::Storage a, int q) {
  const int n = static_cast<int>(a.rows());
  int det = 1, rank = 0;
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = rank; r < n; ++r)
      if (a(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) {
      det = 0;
      continue;
    }
    if (pivot != rank) {
      a.row(pivot).swap(a.row(rank));
      det = (q - det) % q;
    }
    det = det * a(rank, c) % q;
    const int inv = mod_inverse(a(rank, c), q);
    for (int r = rank + 1; r < n; ++r) {
      const int f = a(r, c) * inv % q;
      if (f == 0) continue;
      for (int k = 0; k < n; ++k) a(r, k) = ((a(r, k) - f * a(rank, k)) % q + q) % q;
    }
    ++rank;
  }
  return {rank, rank == n ? det : 0};
}

}  // namespace

int FFMatrix::det() const { return reduce(a_, q_).second; }
int FFMatrix::rank() const { return reduce(a_, q_).first; }

bool FFMatrix::is_identity() const {
  for (int i = 0; i < n(); ++i)
    for (int j = 0; j < n(); ++j)
      if (a_(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

FFMatrix FFMatrix::inverse() const {
  const int k = n();
  Storage a = a_;
  Storage inv = Storage::Identity(k, k);
  for (int c = 0; c < k; ++c) {
    int pivot = -1;
    for (int r = c; r < k; ++r)
      if (a(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw DomainError("FFMatrix::inverse: singular");
    a.row(pivot).swap(a.row(c));
    inv.row(pivot).swap(inv.row(c));
    const int s = mod_inverse(a(c, c), q_);
    for (int j = 0; j < k; ++j) {
      a(c, j) = a(c, j) * s % q_;
      inv(c, j) = inv(c, j) * s % q_;
    }
    for (int r = 0; r < k; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const int f = a(r, c);
      for (int j = 0; j < k; ++j) {
        a(r, j) = ((a(r, j) - f * a(c, j)) % q_ + q_) % q_;
        inv(r, j) = ((inv(r, j) - f * inv(c, j)) % q_ + q_) % q_;
      }
    }
  }
  FFMatrix out(k, q_);
  out.a_ = inv;
  return out;
}

FFMatrix operator*(const FFMatrix& x, const FFMatrix& y) {
  const int n = x.n();
  FFMatrix out(n, x.q_);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int s = 0;
      for (int k = 0; k < n; ++k) s += x.a_(i, k) * y.a_(k, j);
      out.a_(i, j) = s % x.q_;
    }
  return out;
}

FFMatrix operator-(const FFMatrix& x, const FFMatrix& y) {
  FFMatrix out(x.n(), x.q_);
  for (int i = 0; i < x.n(); ++i)
    for (int j = 0; j < x.n(); ++j) out.set(i, j, x.a_(i, j) - y.a_(i, j));
  return out;
}

std::string FFMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < n(); ++i) {
    if (i) os << ';';
    for (int j = 0; j < n(); ++j) os << (j ? "," : "") << a_(i, j);
  }
  os << "] mod " << q_;
  return os.str();
}

std::uint64_t gln_order(int n, int q) {
  std::uint64_t order = 1;
  std::uint64_t qn = 1;
  for (int i = 0; i < n; ++i) qn *= static_cast<std::uint64_t>(q);
  std::uint64_t qi = 1;
  for (int i = 0; i < n; ++i) {
    order *= (qn - qi);
    qi *= static_cast<std::uint64_t>(q);
  }
  return order;
}

std::vector<FFMatrix> enumerate_gln_fq(int n, int q, std::uint64_t guard) {
  if (!is_prime(q)) throw DomainError("enumerate_gln_fq: q must be prime");
  const std::uint64_t order = gln_order(n, q);
  if (order > guard)
    throw ResourceError("enumerate_gln_fq: |GL_" + std::to_string(n) + "(F_" + std::to_string(q) +
                        ")| = " + std::to_string(order) + " exceeds guard " + std::to_string(guard));
  std::uint64_t total = 1;
  for (int i = 0; i < n * n; ++i) total *= static_cast<std::uint64_t>(q);
  std::vector<FFMatrix> out;
  out.reserve(order);
  for (std::uint64_t code = 0; code < total; ++code) {
    FFMatrix m = FFMatrix::decode(code, n, q);
    if (m.det() != 0) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace parind
