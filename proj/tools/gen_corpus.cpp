// Writes the shipped example corpus into a directory.

#include <hopfkit/characters.hpp>
#include <hopfkit/constructions.hpp>
#include <hopfkit/hopf_ops.hpp>
#include <hopfkit/io.hpp>

#include <iostream>

using namespace hopfkit;

namespace {

HopfPtr broken_counit() {
  const HopfPtr a = a_c2();
  const std::size_t n = a->dim();
  HopfBuilder b(n);
  b.name("A_C2 with broken counit").labels(a->labels());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) b.mult(i, j, a->multiply_basis(i, j));
    b.comult(i, a->comultiply_basis(i));
  }
  Vec eps = a->counit();
  eps[2] = CycloScalar(1);
  b.unit(a->unit()).counit(eps).antipode(a->antipode_matrix());
  return b.build();
}

TensorElement kz15_r() {
  const FiniteGroup z15 = FiniteGroup::cyclic(15);
  const CharacterGroup chars = character_group(z15, z15.closure({1}));
  for (const Bicharacter& rho : enumerate_bicharacters(z15, chars)) {
    bool match = true;
    for (std::size_t a = 0; a < 15 && match; ++a) {
      for (std::size_t b = 0; b < 15 && match; ++b) {
        match = rho.value(a, b) == CycloScalar::root_of_unity(15, static_cast<std::int64_t>(a * b));
      }
    }
    if (match) return bicharacter_r_matrix(z15, rho);
  }
  throw std::logic_error("no bicharacter zeta^(ab) on Z15");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_corpus <directory>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  auto algebra = [&](const char* file, const FiniteDimHopf& h, const std::optional<TensorElement>& r,
                     const CharacterHint& hint = {}) { save_algebra(dir / file, h, r, hint); };
  using Kind = CharacterHint::Kind;

  const HopfPtr ac2 = a_c2();
  algebra("ac2.hopf.json", *ac2, a_c2_r_family(1, 2, 3, 4));
  algebra("ac2_b1c0.hopf.json", *ac2, a_c2_r_family(0, 1, 0, 0));
  algebra("ac2_triangular.hopf.json", *ac2, a_c2_r_family(1, 2, 2, 3));
  algebra("broken_counit.hopf.json", *broken_counit(), std::nullopt);

  const FiniteGroup z3 = FiniteGroup::cyclic(3);
  const QTPair dz3 = drinfeld_double(*group_algebra(z3));
  algebra("double_z3.hopf.json", dz3.algebra(), dz3.r(), {Kind::Double, z3});

  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  const HopfPtr ks3 = group_algebra(s3);
  for (const GroupQtStructure& s : enumerate_qt_group(s3)) {
    if (!s.rho.is_trivial()) {
      algebra("ks3_rho.hopf.json", *ks3, s.pair.r(), {Kind::GroupAlgebra, s3});
      break;
    }
  }
  algebra("trivial_r.hopf.json", *ks3, ks3->one_tensor(), {Kind::GroupAlgebra, s3});

  const FiniteGroup z15 = FiniteGroup::cyclic(15);
  algebra("kz15_nondeg.hopf.json", *group_algebra(z15), kz15_r(), {Kind::GroupAlgebra, z15});

  const FiniteGroup g21 = FiniteGroup::builtin("Z7xZ3");
  const HopfPtr kg21 = group_algebra(g21);
  algebra("kg21_trivial.hopf.json", *kg21, kg21->one_tensor(), {Kind::GroupAlgebra, g21});

  write_text_file(dir / "s3.group.json", dump_group(s3));
  write_text_file(dir / "s3_characters.vec.json", dump_vectors(6, characters(ks3).characters));
  write_text_file(dir / "ac2_grouplikes.vec.json", dump_vectors(8, group_likes(*dual(*ac2)).elements));
  write_text_file(dir / "ac2_not_subcoalgebra.vec.json", dump_vectors(8, {unit_vec(8, 2)}));
  return 0;
}
