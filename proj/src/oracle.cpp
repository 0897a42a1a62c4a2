#include "fatpoints/oracle.hpp"

#include <utility>

#include "fatpoints/errors.hpp"

namespace fatpoints {

namespace {

// n (n-1) ... (n-k+1)
long falling(int n, int k) {
  long r = 1;
  for (int i = 0; i < k; ++i) r *= n - i;
  return r;
}

}  // namespace

std::size_t bareiss_rank(IntMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  BigInt prev = 1;
  BigInt tmp;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(m(pivot, c)) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m(pivot, j), m(rank, j));
    }
    const BigInt& p = m(rank, c);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const BigInt& lead = m(i, c);
      if (sgn(lead) == 0) {
        // Row still needs the p/prev scaling to keep later divisions exact.
        for (std::size_t j = c + 1; j < cols; ++j) {
          mpz_mul(tmp.get_mpz_t(), p.get_mpz_t(), m(i, j).get_mpz_t());
          mpz_divexact(m(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
        }
        continue;
      }
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_mul(tmp.get_mpz_t(), p.get_mpz_t(), m(i, j).get_mpz_t());
        mpz_submul(tmp.get_mpz_t(), lead.get_mpz_t(), m(rank, j).get_mpz_t());
        mpz_divexact(m(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::vector<std::array<int, 3>> monomials(int t) {
  std::vector<std::array<int, 3>> out;
  out.reserve(static_cast<std::size_t>(binomial(t + 2, 2)));
  for (int a = t; a >= 0; --a) {
    for (int b = t - a; b >= 0; --b) out.push_back({a, b, t - a - b});
  }
  return out;
}

IntMatrix conditions_matrix(const FatPointScheme& z, int t) {
  if (t < 0) throw Error("degree must be nonnegative");
  const auto mons = monomials(t);
  std::size_t row_count = 0;
  for (const auto& fp : z.points()) row_count += static_cast<std::size_t>(binomial(fp.multiplicity + 1, 2));
  IntMatrix m(row_count, mons.size());

  std::size_t row = 0;
  for (const auto& fp : z.points()) {
    // Derivatives of a form of degree t scale homogeneously, so vanishing at
    // the integer representative is vanishing at the affine point obtained by
    // dehomogenizing at the nonzero coordinate k.
    const auto x = fp.point.primitive_integers();
    std::size_t k = 0;
    while (sgn(x[k]) == 0) ++k;
    const std::size_t u = (k + 1) % 3;
    const std::size_t v = (k + 2) % 3;

    std::array<std::vector<BigInt>, 3> pow;
    for (std::size_t c = 0; c < 3; ++c) {
      pow[c].resize(static_cast<std::size_t>(t) + 1);
      pow[c][0] = 1;
      for (int e = 1; e <= t; ++e) pow[c][static_cast<std::size_t>(e)] = pow[c][static_cast<std::size_t>(e) - 1] * x[c];
    }

    for (int order = 0; order < fp.multiplicity; ++order) {
      for (int du = order; du >= 0; --du) {
        const int dv = order - du;
        for (std::size_t col = 0; col < mons.size(); ++col) {
          const auto& e = mons[col];
          const int eu = e[u];
          const int ev = e[v];
          if (eu < du || ev < dv) continue;
          m(row, col) = BigInt(falling(eu, du)) * BigInt(falling(ev, dv)) *
                        pow[u][static_cast<std::size_t>(eu - du)] * pow[v][static_cast<std::size_t>(ev - dv)] *
                        pow[k][static_cast<std::size_t>(e[k])];
        }
        ++row;
      }
    }
  }
  return m;
}

long long ideal_dimension(const FatPointScheme& z, int t) {
  const auto full = binomial(t + 2, 2);
  if (z.empty()) return full;
  return full - static_cast<long long>(bareiss_rank(conditions_matrix(z, t)));
}

std::vector<long long> hilbert_values(const FatPointScheme& z, int max_degree) {
  std::vector<long long> h;
  for (int t = 0; t <= max_degree; ++t) h.push_back(binomial(t + 2, 2) - ideal_dimension(z, t));
  return h;
}

int stabilization_cap(const FatPointScheme& z) { return z.multiplicity_sum() + 1; }

HilbertFunction hilbert_function(const FatPointScheme& z) {
  const long long degree = scheme_degree(z);
  if (degree == 0) return HilbertFunction::from_values({0});
  const int cap = stabilization_cap(z);
  std::vector<long long> h;
  for (int t = 0; t <= cap; ++t) {
    h.push_back(binomial(t + 2, 2) - ideal_dimension(z, t));
    if (h.back() == degree) return HilbertFunction::from_values(h);
  }
  throw CapExceeded("Hilbert function did not reach deg Z = " + std::to_string(degree) + " by degree " +
                    std::to_string(cap));
}

DeltaH delta_hf(const FatPointScheme& z) {
  if (z.empty()) throw Error("delta_hf needs a nonempty scheme");
  return first_difference(hilbert_function(z));
}

}  // namespace fatpoints
