#include "lindex/gkls.hpp"

#include <cmath>
#include <string>

#include "lindex/errors.hpp"

namespace lindex {

namespace {

Eigen::Matrix4cd kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return out;
}

void check_orthonormal(const BlochBasis& basis, const Tolerances& tol) {
  for (int i = 0; i < 3; ++i) {
    if (basis[i].convention() != AxisNorm::Full) {
      throw Error(ErrorCode::InvalidBasis, "Bloch basis must be full-normalized");
    }
    for (int j = 0; j < 3; ++j) {
      const double dot = basis[i].vector().dot(basis[j].vector());
      if (std::abs(dot - (i == j ? 1.0 : 0.0)) > tol.norm) {
        throw Error(ErrorCode::InvalidBasis, "Bloch basis is not orthonormal");
      }
    }
  }
}

}  // namespace

GklsSystem::GklsSystem(Operator2 hamiltonian, std::vector<JumpTerm> terms, const Tolerances& tol)
    : hamiltonian_(std::move(hamiltonian)), terms_(std::move(terms)) {
  if (!hamiltonian_.is_hermitian(tol.herm)) {
    throw Error(ErrorCode::InvalidSystem, "Hamiltonian is not Hermitian");
  }
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!std::isfinite(terms_[i].rate) || terms_[i].rate < 0.0) {
      throw Error(ErrorCode::InvalidSystem,
                  "rate of term " + std::to_string(i) + " must be finite and >= 0");
    }
  }
}

Operator2 dissipator_apply(const Operator2& jump, const Operator2& rho) {
  const Operator2 jd = jump.adjoint();
  return jump * rho * jd - 0.5 * anticommutator(jd * jump, rho);
}

Operator2 generator_apply(const GklsSystem& sys, const Operator2& rho) {
  Operator2 out = -kI * commutator(sys.hamiltonian(), rho);
  for (const JumpTerm& t : sys.terms()) {
    out += t.rate * dissipator_apply(t.op, rho);
  }
  return out;
}

Eigen::Vector4cd vectorize(const Operator2& rho) {
  return Eigen::Map<const Eigen::Vector4cd>(rho.matrix().data());
}

Operator2 unvectorize(const Eigen::Vector4cd& v) {
  return Operator2(Eigen::Map<const Eigen::Matrix2cd>(v.data()));
}

double max_abs_diff(const Liouvillian4& a, const Liouvillian4& b) {
  return (a.mat - b.mat).cwiseAbs().maxCoeff();
}

Liouvillian4 liouvillian_matrix(const GklsSystem& sys) {
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  const Eigen::Matrix2cd& h = sys.hamiltonian().matrix();
  Liouvillian4 out;
  out.mat = -kI * (kron(id, h) - kron(h.transpose(), id));
  for (const JumpTerm& t : sys.terms()) {
    const Eigen::Matrix2cd& l = t.op.matrix();
    const Eigen::Matrix2cd ldl = l.adjoint() * l;
    out.mat += t.rate * (kron(l.conjugate(), l) - 0.5 * kron(id, ldl) -
                         0.5 * kron(ldl.transpose(), id));
  }
  return out;
}

BlochBasis pauli_basis() {
  return {HermitianAxis(Eigen::Vector3d::UnitX(), AxisNorm::Full),
          HermitianAxis(Eigen::Vector3d::UnitY(), AxisNorm::Full),
          HermitianAxis(Eigen::Vector3d::UnitZ(), AxisNorm::Full)};
}

Operator2 AffineBlochGenerator::state(const Eigen::Vector3d& r) const {
  Operator2 rho = 0.5 * Operator2::identity();
  for (int i = 0; i < 3; ++i) {
    rho += (0.5 * r(i)) * basis[i].op();
  }
  return rho;
}

Eigen::Vector3d AffineBlochGenerator::coordinates(const Operator2& rho) const {
  Eigen::Vector3d r;
  for (int i = 0; i < 3; ++i) {
    r(i) = (basis[i].op() * rho).trace().real();
  }
  return r;
}

AffineBlochGenerator bloch_generator(const Liouvillian4& liouvillian, const BlochBasis& basis,
                                     const Tolerances& tol) {
  check_orthonormal(basis, tol);
  AffineBlochGenerator gen;
  gen.basis = basis;
  // r_i = Tr(A_i rho); rho = I/2 + sum_j r_j A_j / 2.
  const Operator2 image_of_identity = liouvillian.apply(Operator2::identity());
  for (int i = 0; i < 3; ++i) {
    const Operator2 ai = basis[i].op();
    gen.drive(i) = 0.5 * (ai * image_of_identity).trace().real();
    for (int j = 0; j < 3; ++j) {
      gen.m(i, j) = 0.5 * (ai * liouvillian.apply(basis[j].op())).trace().real();
    }
  }
  return gen;
}

AffineBlochGenerator bloch_generator(const GklsSystem& sys, const BlochBasis& basis,
                                     const Tolerances& tol) {
  return bloch_generator(liouvillian_matrix(sys), basis, tol);
}

GklsSystem transform_energy_shift(const GklsSystem& sys, double e0) {
  return GklsSystem(sys.hamiltonian() - e0 * Operator2::identity(),
                    {sys.terms().begin(), sys.terms().end()});
}

GklsSystem transform_rescale(const GklsSystem& sys, std::size_t index, cplx alpha) {
  if (index >= sys.terms().size()) {
    throw std::out_of_range("transform_rescale: no term " + std::to_string(index));
  }
  if (std::abs(alpha) == 0.0 || !std::isfinite(std::abs(alpha))) {
    throw Error(ErrorCode::ZeroScale, "rescale factor must be nonzero and finite");
  }
  std::vector<JumpTerm> terms(sys.terms().begin(), sys.terms().end());
  terms[index].op = alpha * terms[index].op;
  terms[index].rate /= std::norm(alpha);
  return GklsSystem(sys.hamiltonian(), std::move(terms));
}

GklsSystem transform_identity_shift(const GklsSystem& sys, std::span<const cplx> alphas) {
  if (alphas.size() != sys.terms().size()) {
    throw std::invalid_argument("transform_identity_shift: one shift per term required");
  }
  Operator2 h = sys.hamiltonian();
  std::vector<JumpTerm> terms;
  terms.reserve(alphas.size());
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    const JumpTerm& t = sys.terms()[i];
    const cplx a = alphas[i];
    h += (t.rate / (2.0 * kI)) * (a * t.op.adjoint() - std::conj(a) * t.op);
    terms.push_back({t.rate, t.op - a * Operator2::identity()});
  }
  // Remove rounding-level anti-Hermitian residue before validation.
  h = 0.5 * (h + h.adjoint());
  return GklsSystem(h, std::move(terms));
}

GklsSystem transform_unitary_mix(const GklsSystem& sys, const Eigen::MatrixXcd& u,
                                 const Tolerances& tol) {
  const auto n = static_cast<Eigen::Index>(sys.terms().size());
  if (u.rows() != n || u.cols() != n) {
    throw std::invalid_argument("transform_unitary_mix: matrix size must equal term count");
  }
  if ((u * u.adjoint() - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() > tol.herm) {
    throw Error(ErrorCode::NotUnitary, "mixing matrix is not unitary");
  }
  std::vector<JumpTerm> terms;
  terms.reserve(sys.terms().size());
  for (Eigen::Index i = 0; i < n; ++i) {
    Operator2 mixed;
    for (Eigen::Index k = 0; k < n; ++k) {
      const JumpTerm& t = sys.terms()[static_cast<std::size_t>(k)];
      mixed += (u(i, k) * std::sqrt(t.rate)) * t.op;
    }
    terms.push_back({1.0, mixed});
  }
  return GklsSystem(sys.hamiltonian(), std::move(terms));
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::PureDephasing: return "PureDephasing";
    case Classification::ExchangeCandidate: return "ExchangeCandidate";
    case Classification::AdjointNotClosed: return "AdjointNotClosed";
    case Classification::Collinear: return "Collinear";
  }
  return "Unknown";
}

Classification classify_input(const GklsSystem& sys, const Tolerances& tol) {
  const auto count = sys.terms().size();
  if (count > 2) {
    throw Error(ErrorCode::UnsupportedTermCount,
                "classification supports 1 or 2 jump terms, got " + std::to_string(count));
  }

  Eigen::Matrix<cplx, 3, Eigen::Dynamic> span(3, static_cast<Eigen::Index>(count));
  for (std::size_t i = 0; i < count; ++i) {
    span.col(static_cast<Eigen::Index>(i)) = pauli_decompose(sys.terms()[i].op).vector();
  }

  int rank = 0;
  if (count > 0) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(span, Eigen::ComputeThinU);
    const auto& s = svd.singularValues();
    for (Eigen::Index i = 0; i < s.size(); ++i) {
      if (s(0) > 0.0 && s(i) > tol.closure * s(0)) ++rank;
    }
    if (count == 2 && rank == 2) {
      // conj(L_i) must stay inside the complex span.
      const Eigen::MatrixXcd q = svd.matrixU();
      const Eigen::MatrixXcd conj_span = span.conjugate();
      const Eigen::MatrixXcd outside = conj_span - q * (q.adjoint() * conj_span);
      if (outside.cwiseAbs().maxCoeff() <= tol.closure * s(0)) {
        return Classification::ExchangeCandidate;
      }
    }
  }

  bool all_hermitian = true;
  for (Eigen::Index i = 0; i < span.cols(); ++i) {
    const Eigen::Vector3cd v = span.col(i);
    // v is real up to a global phase iff v x conj(v) = 0.
    if (v.cross(v.conjugate()).norm() > tol.herm * std::max(1.0, v.squaredNorm())) {
      all_hermitian = false;
    }
  }
  if (all_hermitian) return Classification::PureDephasing;
  if (count == 2 && rank <= 1) return Classification::Collinear;
  return Classification::AdjointNotClosed;
}

}  // namespace lindex
