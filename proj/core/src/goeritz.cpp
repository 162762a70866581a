#include "twobridge/goeritz.hpp"

#include <stdexcept>
#include <utility>

#include "twobridge/error.hpp"

namespace twobridge {

namespace {

void require_odd_length(const ContinuedFraction& cf) {
  if (!cf.has_odd_length())
    throw InputError("continued fraction [" + cf.str() +
                     "] has even length; normalize it to odd length first");
}

std::size_t to_size(const ExactInt& v, const char* what) {
  if (v.sign() < 0 || v > ExactInt(kMaxMatrixDimension))
    throw InputError(std::string(what) + " " + v.str() + " exceeds the supported matrix size " +
                     std::to_string(kMaxMatrixDimension));
  return static_cast<std::size_t>(v.to_int64());
}

}  // namespace

std::string WhiteRegion::label() const {
  if (kind == Kind::kJunction) return "e" + std::to_string(twist);
  return "e" + std::to_string(twist) + "_" + std::to_string(position);
}

ExactInt goeritz_dimension(const ContinuedFraction& cf) {
  ExactInt n(-1);
  for (std::size_t i = 1; i <= cf.size(); i += 2) n += cf.coefficient(i).abs();
  return n;
}

WhiteRegionBasis::WhiteRegionBasis(const ContinuedFraction& cf) {
  require_odd_length(cf);
  to_size(goeritz_dimension(cf), "Goeritz dimension");
  const std::size_t n = cf.size();
  bigon_offset_.assign(n + 1, 0);
  bigon_count_.assign(n + 1, 0);
  for (std::size_t i = 1; i <= n; i += 2) {
    bigon_offset_[i] = regions_.size();
    bigon_count_[i] = static_cast<std::size_t>(cf.coefficient(i).abs().to_int64()) - 1;
    for (std::size_t k = 1; k <= bigon_count_[i]; ++k)
      regions_.push_back({WhiteRegion::Kind::kBigon, i, k});
  }
  junction_offset_ = regions_.size();
  for (std::size_t j = 2; j < n; j += 2) regions_.push_back({WhiteRegion::Kind::kJunction, j, 0});
}

std::size_t WhiteRegionBasis::bigon_count(std::size_t twist) const { return bigon_count_.at(twist); }

std::size_t WhiteRegionBasis::bigon_index(std::size_t twist, std::size_t position) const {
  if (twist % 2 == 0 || position == 0 || position > bigon_count_.at(twist))
    throw std::out_of_range("no bigon e" + std::to_string(twist) + "_" + std::to_string(position));
  return bigon_offset_[twist] + position - 1;
}

std::size_t WhiteRegionBasis::junction_index(std::size_t twist) const {
  if (twist % 2 != 0 || twist == 0 || junction_offset_ + twist / 2 - 1 >= regions_.size())
    throw std::out_of_range("no junction e" + std::to_string(twist));
  return junction_offset_ + twist / 2 - 1;
}

GoeritzMatrix goeritz_matrix(const ContinuedFraction& cf) {
  WhiteRegionBasis basis(cf);
  const std::size_t n = cf.size();
  IntMatrix g(basis.size(), basis.size());

  for (std::size_t i = 1; i <= n; i += 2) {
    const int eps = cf.handedness(i);
    const std::size_t m = basis.bigon_count(i);
    for (std::size_t k = 1; k <= m; ++k) {
      const std::size_t a = basis.bigon_index(i, k);
      g(a, a) = ExactInt(-2 * eps);
      if (k < m) {
        const std::size_t b = basis.bigon_index(i, k + 1);
        g(a, b) = g(b, a) = ExactInt(eps);
      }
    }
  }

  for (std::size_t j = 2; j < n; j += 2) {
    const std::size_t e = basis.junction_index(j);
    g(e, e) = cf.coefficient(j) - ExactInt(cf.handedness(j - 1)) - ExactInt(cf.handedness(j + 1));
    // Last bigon of the box above and first bigon of the box below.
    if (const std::size_t above = basis.bigon_count(j - 1); above > 0) {
      const std::size_t b = basis.bigon_index(j - 1, above);
      g(e, b) = g(b, e) = ExactInt(cf.handedness(j - 1));
    }
    if (basis.bigon_count(j + 1) > 0) {
      const std::size_t b = basis.bigon_index(j + 1, 1);
      g(e, b) = g(b, e) = ExactInt(cf.handedness(j + 1));
    }
    // A single-crossing odd box joins two junctions directly.
    if (j + 2 < n && basis.bigon_count(j + 1) == 0) {
      const std::size_t next = basis.junction_index(j + 2);
      g(e, next) = g(next, e) = ExactInt(cf.handedness(j + 1));
    }
  }
  return {std::move(basis), std::move(g)};
}

Inertia DiagonalForm::inertia() const {
  Inertia in;
  for (const auto& d : entries) {
    switch (d.sign()) {
      case 1: ++in.positive; break;
      case -1: ++in.negative; break;
      default: ++in.zero; break;
    }
  }
  return in;
}

ExactRational DiagonalForm::product() const {
  ExactRational p(1);
  for (const auto& d : entries) p *= d;
  return p;
}

std::vector<ExactRational> junction_weights_by_recursion(const ContinuedFraction& cf) {
  require_odd_length(cf);
  std::vector<ExactRational> weights;
  for (std::size_t j = 2; j < cf.size(); j += 2) {
    const ExactRational above(cf.coefficient(j - 1));
    ExactRational w = ExactRational(cf.coefficient(j)) - above.reciprocal() -
                      ExactRational(cf.coefficient(j + 1)).reciprocal();
    if (!weights.empty()) {
      if (weights.back().is_zero())
        throw DegenerateFormError("junction weight at position " + std::to_string(j - 2) + " of [" +
                                  cf.str() + "] is zero");
      w -= (above * above * weights.back()).reciprocal();
    }
    weights.push_back(std::move(w));
  }
  return weights;
}

std::vector<ExactRational> junction_weights_by_convergents(const ContinuedFraction& cf) {
  require_odd_length(cf);
  const ConvergentSequence conv = convergents(cf);
  std::vector<ExactRational> weights;
  for (std::size_t j = 2; j < cf.size(); j += 2) {
    const ExactInt& before = conv[j - 1].numerator;
    if (before.is_zero())
      throw DegenerateFormError("prefix numerator p_" + std::to_string(j - 1) + " of [" + cf.str() +
                                "] is zero");
    weights.emplace_back(conv[j + 1].numerator, cf.coefficient(j + 1) * before);
  }
  return weights;
}

DiagonalForm closed_form_diagonal(const ContinuedFraction& cf) {
  require_odd_length(cf);
  to_size(goeritz_dimension(cf), "Goeritz dimension");
  const auto by_recursion = junction_weights_by_recursion(cf);
  const auto by_convergents = junction_weights_by_convergents(cf);
  if (by_recursion != by_convergents)
    throw CrossCheckError("junction weights of [" + cf.str() + "] disagree between recursion and convergents");

  DiagonalForm form;
  for (std::size_t i = 1; i <= cf.size(); i += 2) {
    const int eps = cf.handedness(i);
    const long bigons = static_cast<long>(cf.coefficient(i).abs().to_int64()) - 1;
    for (long k = 1; k <= bigons; ++k) form.entries.emplace_back(ExactInt(-eps * (k + 1)), ExactInt(k));
  }
  for (std::size_t j = 0; j < by_recursion.size(); ++j) {
    if (by_recursion[j].is_zero())
      throw DegenerateFormError("junction weight at position " + std::to_string(2 * j + 2) + " of [" +
                                cf.str() + "] is zero");
    form.entries.push_back(by_recursion[j]);
  }
  return form;
}

RationalMatrix transition_matrix(const ContinuedFraction& cf) {
  const WhiteRegionBasis basis(cf);
  const std::size_t n = cf.size();
  const std::size_t dim = basis.size();
  RationalMatrix p(dim, dim);

  // Bigon columns: (eps/k) (e_1 + 2 e_2 + ... + k e_k).
  for (std::size_t i = 1; i <= n; i += 2) {
    const int eps = cf.handedness(i);
    for (std::size_t k = 1; k <= basis.bigon_count(i); ++k) {
      const std::size_t col = basis.bigon_index(i, k);
      for (std::size_t r = 1; r <= k; ++r)
        p(basis.bigon_index(i, r), col) =
            ExactRational(ExactInt(eps * static_cast<long>(r)), ExactInt(static_cast<long>(k)));
    }
  }

  auto add_column = [&](std::size_t dst, std::size_t src, const ExactRational& factor) {
    for (std::size_t r = 0; r < dim; ++r)
      if (!p(r, src).is_zero()) p(r, dst) += factor * p(r, src);
  };

  const auto weights = junction_weights_by_recursion(cf);
  for (std::size_t j = 2; j < n; j += 2) {
    const std::size_t col = basis.junction_index(j);
    p(col, col) = ExactRational(1);
    // Clear the coupling to the last bigon of the box above...
    if (const std::size_t above = basis.bigon_count(j - 1); above > 0) {
      const ExactRational factor(ExactInt(static_cast<long>(above)), cf.coefficient(j - 1));
      add_column(col, basis.bigon_index(j - 1, above), factor);
    }
    // ...and to every bigon of the box below.
    const int eps_below = cf.handedness(j + 1);
    for (std::size_t k = 1; k <= basis.bigon_count(j + 1); ++k)
      add_column(col, basis.bigon_index(j + 1, k),
                 ExactRational(ExactInt(eps_below), ExactInt(static_cast<long>(k + 1))));
    // Orthogonalize against the previous junction vector.
    if (j >= 4) {
      const ExactRational& prev_weight = weights[j / 2 - 2];
      if (prev_weight.is_zero())
        throw DegenerateFormError("junction weight at position " + std::to_string(j - 2) + " of [" +
                                  cf.str() + "] is zero");
      add_column(col, basis.junction_index(j - 2),
                 -(ExactRational(cf.coefficient(j - 1)) * prev_weight).reciprocal());
    }
  }
  return p;
}

DiagonalForm congruence_diagonalize(const RationalMatrix& input) {
  if (!input.is_symmetric()) throw std::invalid_argument("congruence_diagonalize needs a symmetric matrix");
  RationalMatrix m = input;
  const std::size_t n = m.rows();

  auto swap_index = [&](std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < n; ++c) std::swap(m(a, c), m(b, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(m(r, a), m(r, b));
  };
  // Row/column operation: index a += factor * index b.
  auto add_index = [&](std::size_t a, std::size_t b, const ExactRational& factor) {
    for (std::size_t c = 0; c < n; ++c) m(a, c) += factor * m(b, c);
    for (std::size_t r = 0; r < n; ++r) m(r, a) += factor * m(r, b);
  };

  DiagonalForm form;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t j = k + 1;
      while (j < n && m(j, j).is_zero()) ++j;
      if (j < n) {
        swap_index(k, j);
      } else {
        j = k + 1;
        while (j < n && m(k, j).is_zero()) ++j;
        // m(j,j) = 0 here, so the new pivot is 2 m(k,j) != 0.
        if (j < n) add_index(k, j, ExactRational(1));
      }
    }
    const ExactRational pivot = m(k, k);
    if (!pivot.is_zero()) {
      for (std::size_t r = k + 1; r < n; ++r) {
        if (m(r, k).is_zero()) continue;
        const ExactRational factor = -(m(r, k) / pivot);
        add_index(r, k, factor);
      }
    }
    form.entries.push_back(pivot);
  }
  return form;
}

ExactInt goeritz_signature(const ContinuedFraction& cf) {
  require_odd_length(cf);
  const ConvergentSequence conv = convergents(cf);
  bool degenerate = false;
  for (std::size_t i = 1; i < cf.size(); i += 2) degenerate = degenerate || conv[i].numerator.is_zero();
  if (conv.last().numerator.is_zero()) degenerate = true;

  if (degenerate) {
    const ContinuedFraction rev = cf.reversed();
    const ConvergentSequence rconv = convergents(rev);
    bool rev_degenerate = rconv.last().numerator.is_zero();
    for (std::size_t i = 1; i < rev.size(); i += 2)
      rev_degenerate = rev_degenerate || rconv[i].numerator.is_zero();
    if (!rev_degenerate) return goeritz_signature(rev);
    const GoeritzMatrix g = goeritz_matrix(cf);
    return ExactInt(congruence_diagonalize(to_rational(g.entries)).signature());
  }

  ExactInt sigma;
  for (std::size_t i = 1; i <= cf.size(); i += 2) sigma += ExactInt(cf.handedness(i)) - cf.coefficient(i);
  for (std::size_t j = 2; j < cf.size(); j += 2)
    sigma += ExactInt(conv[j + 1].numerator.sign() * cf.handedness(j + 1) * conv[j - 1].numerator.sign());
  return sigma;
}

ExactInt determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant needs a square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return ExactInt(1);
  IntMatrix m = input;
  int sign = 1;
  ExactInt prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m(r, k).is_zero()) ++r;
      if (r == n) return ExactInt(0);
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(r, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
    prev = m(k, k);
  }
  return sign < 0 ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

ExactRational triangular_determinant(const RationalMatrix& m) {
  if (!m.is_upper_triangular() || m.rows() != m.cols())
    throw std::invalid_argument("triangular_determinant needs a square upper-triangular matrix");
  ExactRational d(1);
  for (std::size_t i = 0; i < m.rows(); ++i) d *= m(i, i);
  return d;
}

}  // namespace twobridge
