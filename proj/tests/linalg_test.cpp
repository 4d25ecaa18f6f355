#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "test_util.hpp"

using namespace pcm;
using pcm_test::make_rng;
using pcm_test::random_state;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

TEST_SUITE("linalg") {

TEST_CASE("pure state validation") {
  CHECK_THROWS_AS(PureState({1.0}), std::invalid_argument);            // not a qubit register
  CHECK_THROWS_AS(PureState({1.0, 0.0, 0.0}), std::invalid_argument);  // not a power of two
  CHECK_THROWS_AS(PureState({0.7, 0.7}), std::invalid_argument);       // not normalized
  CHECK_THROWS_AS(
      PureState(std::vector<Complex>(32, Complex(1.0 / std::sqrt(32.0), 0.0))),
      std::invalid_argument);  // 5 qubits is out of range
  std::vector<Complex> bad = {1.0, std::numeric_limits<double>::quiet_NaN()};
  CHECK_THROWS_AS(PureState{bad}, std::invalid_argument);

  PureState s = PureState::normalized({3.0, 4.0});
  CHECK(std::abs(s[0] - 0.6) < kEqTol);
  CHECK(std::abs(s[1] - 0.8) < kEqTol);
  CHECK_THROWS_AS(PureState::normalized({0.0, 0.0}), std::invalid_argument);

  PureState b = PureState::basis_state(2, 3);
  CHECK(b.dim() == 4);
  CHECK(std::abs(b[3] - 1.0) == 0.0);

  PureState c = PureState({Complex(0.0, 1.0), 0.0}).conjugate();
  CHECK(std::abs(c[0] - Complex(0.0, -1.0)) == 0.0);
}

TEST_CASE("tensor products of basis and superposition states") {
  PureState zero = PureState::basis_state(1, 0);
  PureState one = PureState::basis_state(1, 1);
  PureState plus = PureState({kInvSqrt2, kInvSqrt2});

  PureState zz = tensor(zero, zero);
  CHECK(std::abs(zz[0] - 1.0) < kEqTol);

  PureState oz = tensor(one, zero);
  CHECK(std::abs(oz[2] - 1.0) < kEqTol);  // |10> lives at index 2

  PureState po = tensor(plus, one);
  CHECK(std::abs(po[1] - kInvSqrt2) < kEqTol);
  CHECK(std::abs(po[3] - kInvSqrt2) < kEqTol);
  CHECK(std::abs(po[0]) < kEqTol);
  CHECK(std::abs(po[2]) < kEqTol);

  CHECK_THROWS_AS(tensor(zz, tensor(zz, zz)), std::invalid_argument);  // 6 qubits
}

TEST_CASE("tensor is associative") {
  auto rng = make_rng(1);
  for (int it = 0; it < 200; ++it) {
    PureState a = random_state(rng, 1);
    PureState b = random_state(rng, 2);
    PureState c = random_state(rng, 1);
    PureState left = tensor(tensor(a, b), c);
    PureState right = tensor(a, tensor(b, c));
    CHECK(pcm_test::max_amp_diff(left, right) <= 1e-15);
  }
}

TEST_CASE("outer products") {
  CMatrix m0 = outer_product(PureState::basis_state(1, 0));
  CHECK(std::abs(m0(0, 0) - 1.0) < kEqTol);
  CHECK(std::abs(m0(1, 1)) < kEqTol);

  CMatrix mp = outer_product(PureState({kInvSqrt2, kInvSqrt2}));
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) CHECK(std::abs(mp(r, c) - 0.5) < kEqTol);

  CMatrix mphi = outer_product(bell_state(BellKind::PhiPlus));
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      double expected = ((r == 0 || r == 3) && (c == 0 || c == 3)) ? 0.5 : 0.0;
      CHECK(std::abs(mphi(r, c) - expected) < kEqTol);
    }
  }

  auto rng = make_rng(2);
  PureState s = random_state(rng, 3);
  CMatrix m = outer_product(s);
  CHECK(m.is_hermitian());
  CHECK(std::abs(m.trace() - 1.0) <= 1e-13);
}

TEST_CASE("partial trace of a maximally entangled pair") {
  CMatrix rho = outer_product(bell_state(BellKind::PhiPlus));
  for (int keep : {0, 1}) {
    CMatrix reduced = partial_trace(rho, {keep});
    CHECK(reduced.max_abs_diff(Complex(0.5) * CMatrix::identity(2)) < kEqTol);
  }
}

TEST_CASE("partial trace keeping everything is the identity") {
  auto rng = make_rng(3);
  PureState s = random_state(rng, 4);
  CMatrix rho = outer_product(s);
  CMatrix same = partial_trace(rho, {0, 1, 2, 3});
  CHECK(same.max_abs_diff(rho) == 0.0);
}

TEST_CASE("partial trace of a product of entangled pairs") {
  // For v PhiPlus(ab) PhiPlus(cd) with v = 1, the (a,b) pair is pure PhiPlus.
  PureState s = tensor(bell_state(BellKind::PhiPlus), bell_state(BellKind::PhiPlus));
  CMatrix reduced = partial_trace(outer_product(s), {0, 1});
  CHECK(reduced.max_abs_diff(outer_product(bell_state(BellKind::PhiPlus))) < kEqTol);
}

TEST_CASE("partial trace composes over disjoint steps") {
  auto rng = make_rng(4);
  for (int it = 0; it < 100; ++it) {
    PureState s = random_state(rng, 4);
    CMatrix rho = outer_product(s);
    CMatrix two_step = partial_trace(partial_trace(rho, {0, 1, 2}), {0, 1});
    CMatrix one_step = partial_trace(rho, {0, 1});
    CHECK(two_step.max_abs_diff(one_step) <= 1e-13);
  }
}

TEST_CASE("partial trace output is a valid reduced state") {
  auto rng = make_rng(5);
  for (int it = 0; it < 10000; ++it) {
    PureState s = random_state(rng, 3);
    CMatrix reduced = partial_trace(outer_product(s), {1});
    CHECK(reduced.is_hermitian(1e-13));
    CHECK(std::abs(reduced.trace() - 1.0) <= 1e-13);
  }
}

TEST_CASE("partial trace rejects invalid subsets") {
  CMatrix rho = outer_product(bell_state(BellKind::PhiPlus));
  CHECK_THROWS_AS(partial_trace(rho, std::initializer_list<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(rho, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(rho, {2}), std::invalid_argument);
}

TEST_CASE("density matrix validation") {
  CMatrix bad = CMatrix::identity(2);
  bad(0, 1) = Complex(0.0, 1.0);  // not Hermitian
  CHECK_THROWS_AS(DensityMatrix{bad}, std::invalid_argument);

  CMatrix scaled = CMatrix::identity(2);  // trace 2
  CHECK_THROWS_AS(DensityMatrix{scaled}, std::invalid_argument);

  CMatrix negative(2);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;  // negative eigenvalue
  CHECK_THROWS_AS(DensityMatrix{negative}, std::invalid_argument);

  DensityMatrix mixed = DensityMatrix::maximally_mixed(2);
  CHECK(mixed.dim() == 4);
  CHECK(std::abs(mixed(0, 0) - 0.25) < kEqTol);
}

TEST_CASE("fidelity of pure states against density matrices") {
  PureState zero = PureState::basis_state(1, 0);
  CHECK(fidelity_pure(zero, DensityMatrix(outer_product(zero))) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fidelity_pure(zero, DensityMatrix::maximally_mixed(1)) == doctest::Approx(0.5).epsilon(1e-12));

  auto rng = make_rng(6);
  for (int it = 0; it < 500; ++it) {
    PureState psi = random_state(rng, 1);
    CHECK(std::abs(fidelity_pure(psi, DensityMatrix(outer_product(psi))) - 1.0) <= kEqTol);
  }

  PureState two = PureState::basis_state(2, 0);
  CHECK_THROWS_AS(fidelity_pure(two, DensityMatrix::maximally_mixed(1)), std::invalid_argument);
}

TEST_CASE("bloch vectors of standard states") {
  auto r_mixed = bloch_vector(DensityMatrix::maximally_mixed(1));
  CHECK(std::abs(r_mixed[0]) < kEqTol);
  CHECK(std::abs(r_mixed[1]) < kEqTol);
  CHECK(std::abs(r_mixed[2]) < kEqTol);

  auto r_zero = bloch_vector(DensityMatrix(outer_product(PureState::basis_state(1, 0))));
  CHECK(std::abs(r_zero[0]) < kEqTol);
  CHECK(std::abs(r_zero[1]) < kEqTol);
  CHECK(std::abs(r_zero[2] - 1.0) < kEqTol);

  // Unit-length Bloch vector for arbitrary pure states.
  auto rng = make_rng(7);
  for (int it = 0; it < 500; ++it) {
    auto r = bloch_vector(DensityMatrix(outer_product(random_state(rng, 1))));
    double len = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
    CHECK(std::abs(len - 1.0) <= 1e-12);
  }
}

TEST_CASE("matrix helpers") {
  CMatrix x = pauli_x();
  CMatrix y = pauli_y();
  CMatrix z = pauli_z();

  // xy = iz and cyclic permutations.
  CHECK((x * y).max_abs_diff(Complex(0.0, 1.0) * z) < kEqTol);
  CHECK((y * z).max_abs_diff(Complex(0.0, 1.0) * x) < kEqTol);
  CHECK((z * x).max_abs_diff(Complex(0.0, 1.0) * y) < kEqTol);

  CHECK(kron(x, z).dim() == 4);
  CHECK(std::abs(kron(x, z)(0, 2) - 1.0) < kEqTol);
  CHECK(std::abs(kron(x, z)(1, 3) + 1.0) < kEqTol);

  CMatrix h = x + z;
  CHECK(h.is_hermitian());
  CHECK(std::abs(h.trace()) < kEqTol);
  CHECK(h.adjoint().max_abs_diff(h) < kEqTol);

  std::vector<Complex> u = {1.0, 0.0};
  CHECK(std::abs(quadratic_form(z, u) - 1.0) < kEqTol);
  std::vector<Complex> plus = {kInvSqrt2, kInvSqrt2};
  CHECK(std::abs(quadratic_form(x, plus) - 1.0) < kEqTol);
}

}  // TEST_SUITE
