#pragma once

#include <hopfkit/characters.hpp>
#include <hopfkit/constructions.hpp>
#include <hopfkit/qt.hpp>

#include <string>
#include <vector>

namespace hopfkit::testing {

struct QtExample {
  std::string name;
  QTPair qt;
  /// how to obtain characters, when the algebra is semisimple
  std::optional<CharacterHint> hint;
};

/// Every quasitriangular pair used across the suites: A_C2 at three
/// parameter points, D(kZ2), D(kZ3), D(kS3), the three structures on kS3 and
/// on kZ3, kZ15 with zeta^(ab), k(Z7xZ3) and k^Z3 with R = 1 (x) 1.
const std::vector<QtExample>& qt_examples();
const QtExample& qt_example(const std::string& name);

/// R on kZ15 from rho(a, b) = zeta_15^(ab).
TensorElement kz15_nondegenerate_r();

/// Hopf algebras that must satisfy every axiom.
std::vector<HopfPtr> axiom_gauntlet();

/// The matrix of the projection pi as the rows of functionals p o pi:
/// row a of P is the pullback of the a-th dual basis vector of H_bar.
std::vector<Vec> pulled_back_functionals(const ExactMatrix& projection);

}  // namespace hopfkit::testing
