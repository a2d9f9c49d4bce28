#include "lindex/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "lindex/errors.hpp"

namespace lindex {

namespace {

// Flip a2 (and therefore a3) so that the largest-magnitude component of a3
// is positive. Fixes the otherwise free orientation of the charge axis.
ExchangeBasis canonical_orientation(const HermitianAxis& a1, const HermitianAxis& a2,
                                    const Tolerances& tol) {
  HermitianAxis a3 = complete_basis(a1, a2, tol);
  Eigen::Index k = 0;
  a3.vector().cwiseAbs().maxCoeff(&k);
  if (a3.vector()(k) < 0.0) {
    const HermitianAxis flipped = a2.negated();
    return {a1, flipped, complete_basis(a1, flipped, tol)};
  }
  return {a1, a2, a3};
}

HermitianAxis rotate(const HermitianAxis& u, const HermitianAxis& v, double c, double s) {
  return HermitianAxis::normalized(c * u.vector() + s * v.vector(), AxisNorm::Full);
}

}  // namespace

GklsSystem reduce_traceless(const GklsSystem& sys, const Tolerances& tol) {
  std::vector<cplx> shifts;
  shifts.reserve(sys.terms().size());
  for (const JumpTerm& t : sys.terms()) shifts.push_back(0.5 * t.op.trace());
  const GklsSystem shifted = transform_identity_shift(sys, shifts);

  std::vector<JumpTerm> terms(shifted.terms().begin(), shifted.terms().end());
  for (JumpTerm& t : terms) t.op = t.op.traceless_part();
  Operator2 h = shifted.hamiltonian().traceless_part();
  return GklsSystem(h, std::move(terms), tol);
}

ExchangeBasis build_exchange_basis(const GklsSystem& reduced, const Tolerances& tol) {
  const auto terms = reduced.terms();
  if (terms.size() != 2) {
    throw Error(ErrorCode::NotExchangeCandidate, "exchange basis needs exactly two jump terms");
  }
  // Real and imaginary parts of the Pauli vectors all lie in the Hermitian
  // subspace of an adjoint-closed span. Real parts come first so that the
  // L + L^dag choice is kept whenever it is non-degenerate.
  Eigen::Matrix<cplx, 3, 2> span;
  span.col(0) = pauli_decompose(terms[0].op).vector();
  span.col(1) = pauli_decompose(terms[1].op).vector();
  const Eigen::Vector2d csv = Eigen::JacobiSVD<Eigen::Matrix<cplx, 3, 2>>(span).singularValues();
  if (!(csv(0) > 0.0) || csv(1) <= tol.closure * csv(0)) {
    throw Error(ErrorCode::CollinearSpan, "jump operators span at most one complex dimension");
  }

  std::vector<Eigen::Vector3d> candidates;
  for (const JumpTerm& t : terms) candidates.push_back(pauli_decompose(t.op).vector().real());
  for (const JumpTerm& t : terms) candidates.push_back(pauli_decompose(t.op).vector().imag());

  Eigen::Matrix<double, 3, 4> stack;
  for (int i = 0; i < 4; ++i) stack.col(i) = candidates[static_cast<std::size_t>(i)];
  const Eigen::Vector3d sv = Eigen::JacobiSVD<Eigen::Matrix<double, 3, 4>>(stack).singularValues();
  if (!(sv(0) > 0.0) || sv(1) <= tol.closure * sv(0)) {
    throw Error(ErrorCode::CollinearSpan, "Hermitian part of the span is at most one-dimensional");
  }
  if (sv(2) > tol.closure * sv(0)) {
    throw Error(ErrorCode::NotExchangeCandidate, "span of the jump operators is not adjoint closed");
  }

  const auto first = std::max_element(candidates.begin(), candidates.end(),
                                      [](const auto& a, const auto& b) { return a.norm() < b.norm(); });
  const Eigen::Vector3d e1 = first->normalized();
  const auto second = std::max_element(candidates.begin(), candidates.end(), [&](const auto& a, const auto& b) {
    return e1.cross(a).norm() < e1.cross(b).norm();
  });
  const auto [a1, a2] = orthonormal_pair(Operator2::from_pauli_vector(*first),
                                         Operator2::from_pauli_vector(*second), tol);
  return canonical_orientation(a1, a2, tol);
}

DissipatorCoefficients dissipator_coefficients(const GklsSystem& reduced,
                                               const ExchangeBasis& basis,
                                               const Tolerances& tol) {
  DissipatorCoefficients c;
  const Eigen::Vector3cd u1 = basis.a1.vector().cast<cplx>();
  const Eigen::Vector3cd u2 = basis.a2.vector().cast<cplx>();
  const Eigen::Vector3cd u3 = basis.a3.vector().cast<cplx>();
  for (const JumpTerm& t : reduced.terms()) {
    const PauliCoeffs p = pauli_decompose(t.op);
    const Eigen::Vector3cd v = p.vector();
    const double scale = std::max(1.0, v.norm());
    if (std::abs(p.c0) > tol.closure * scale || std::abs(u3.dot(v)) > tol.closure * scale) {
      throw Error(ErrorCode::NotInSpan, "jump operator is not in span{A1, A2}");
    }
    // Real basis vectors: dot() conjugates the first argument, a no-op here.
    const cplx a = u1.dot(v);
    const cplx b = u2.dot(v);
    c.m11 += t.rate * std::norm(a);
    c.m22 += t.rate * std::norm(b);
    c.m12 += t.rate * (std::conj(a) * b).real();
    c.d += t.rate * (std::conj(a) * b).imag();
  }
  return c;
}

InplaneDiagonalization diagonalize_inplane(const DissipatorCoefficients& c,
                                           const ExchangeBasis& basis) {
  // Proper rotation by theta = atan2(2 m12, m11 - m22) / 2 puts the larger
  // eigenvalue on A1 and leaves A3 (and the antisymmetric part) unchanged.
  const double theta = 0.5 * std::atan2(2.0 * c.m12, c.m11 - c.m22);
  const double mean = 0.5 * (c.m11 + c.m22);
  const double radius = std::hypot(0.5 * (c.m11 - c.m22), c.m12);

  InplaneDiagonalization out{basis, mean + radius, mean - radius, 2.0 * c.d};
  if (theta != 0.0) {
    const double cs = std::cos(theta);
    const double sn = std::sin(theta);
    out.basis.a1 = rotate(basis.a1, basis.a2, cs, sn);
    out.basis.a2 = rotate(basis.a2, basis.a1, cs, -sn);
  }
  return out;
}

FermionicPair fermionic_pair(const ExchangeBasis& basis) {
  const Operator2 sp = 0.5 * (basis.a1.op() + kI * basis.a2.op());
  return {sp, sp.adjoint()};
}

PhysicalForm extract_physical(const GklsSystem& reduced, const InplaneDiagonalization& diag,
                              RatePolicy policy, const Tolerances& tol) {
  if (diag.gamma1 < diag.gamma2) {
    throw std::invalid_argument("extract_physical: gamma1 must be >= gamma2");
  }
  PhysicalForm pf{reduced.hamiltonian().traceless_part(), diag.basis.a3.to_half(), std::nullopt,
                  0.0, 0.0, 0.0};
  const double sum = 4.0 * diag.gamma2;
  const double diff = 2.0 * diag.gamma3;
  pf.gamma_p = 0.5 * (sum + diff);
  pf.gamma_m = 0.5 * (sum - diff);

  const double excess = diag.gamma1 - diag.gamma2;
  if (excess >= tol.deg * diag.gamma1 && excess > 0.0) {
    pf.big_gamma = 4.0 * excess;
    pf.dphase = diag.basis.a1.to_half();
  }
  if (policy == RatePolicy::Reject && !pf.rates_nonnegative()) {
    throw Error(ErrorCode::NegativeRate, "exchange rates (" + std::to_string(pf.gamma_p) + ", " +
                                             std::to_string(pf.gamma_m) + ") are not both >= 0");
  }
  return pf;
}

Liouvillian4 reassemble(const PhysicalForm& pf) {
  const Operator2 id = Operator2::identity();
  const Operator2 n = pf.n.to_half().op();
  const double total = pf.gamma_p + pf.gamma_m;
  const double net = pf.gamma_p - pf.gamma_m;
  const std::optional<Operator2> d =
      pf.dphase ? std::optional<Operator2>(pf.dphase->to_half().op()) : std::nullopt;

  Liouvillian4 out;
  for (int k = 0; k < 4; ++k) {
    Eigen::Vector4cd e = Eigen::Vector4cd::Zero();
    e(k) = 1.0;
    const Operator2 rho = unvectorize(e);
    const cplx tr = rho.trace();
    Operator2 img = -kI * commutator(pf.h_eff, rho);
    img -= total * (rho - 0.5 * tr * id);
    img += (net * tr) * n;
    img += (0.5 * total) * commutator(n, commutator(n, rho));
    if (d) img -= (0.5 * pf.big_gamma) * commutator(*d, commutator(*d, rho));
    out.mat.col(k) = vectorize(img);
  }
  return out;
}

Decomposition decompose_detailed(const GklsSystem& sys, RatePolicy policy,
                                 const Tolerances& tol) {
  const Classification kind = classify_input(sys, tol);
  if (kind != Classification::ExchangeCandidate) {
    throw Error(ErrorCode::NotExchangeCandidate, std::string(to_string(kind)));
  }
  GklsSystem reduced = reduce_traceless(sys, tol);
  ExchangeBasis basis = build_exchange_basis(reduced, tol);
  const DissipatorCoefficients coeffs = dissipator_coefficients(reduced, basis, tol);
  InplaneDiagonalization diag = diagonalize_inplane(coeffs, basis);
  FermionicPair pair = fermionic_pair(diag.basis);
  PhysicalForm form = extract_physical(reduced, diag, policy, tol);
  return {std::move(reduced), std::move(basis), coeffs, std::move(diag), std::move(pair),
          std::move(form)};
}

PhysicalForm decompose(const GklsSystem& sys, RatePolicy policy, const Tolerances& tol) {
  return decompose_detailed(sys, policy, tol).form;
}

}  // namespace lindex
