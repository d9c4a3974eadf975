// Writes the fixture files used by the command-line tests into a directory.

#include "hopfrb/hopfrb.hpp"
#include "hopfrb/io.hpp"

#include <filesystem>
#include <iostream>

namespace fs = std::filesystem;
using namespace hopfrb;
using io::json;

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures DIR\n";
    return 2;
  }
  const fs::path dir = argv[1];
  fs::create_directories(dir);
  const Field q = Field::rationals();

  const GroupTable s3 = symmetric_group_3();
  io::write_json_file(dir / "s3.json", io::to_json(s3));
  io::write_json_file(dir / "z2.json", io::to_json(cyclic_group(2)));
  io::write_json_file(dir / "z3.json", io::to_json(cyclic_group(3)));
  io::write_json_file(dir / "z4.json", io::to_json(cyclic_group(4)));
  io::write_json_file(dir / "f21.json", io::to_json(frobenius_group_21()));

  // H4 = A L with A = k1 and L = H4: B = id into the opposite algebra
  const HopfData h4 = sweedler_h4(q);
  RelRBHopf h4rrb{h4, opposite_hopf(h4), coadjoint_action(h4), LinearMap::identity(q, 4)};
  io::write_json_file(dir / "h4-rrb-exact-factorization.json", io::to_json(h4rrb));

  // S3 = <(1 2 3)> <(1 2)>
  const Elem rot = 1, swap = 2;  // generator order of symmetric_group_3
  RelRBHopf s3rrb = exact_factorization_rrb(s3, s3.generated({rot}), s3.generated({swap}), q);
  io::write_json_file(dir / "s3-rrb-exact-factorization.json", io::to_json(s3rrb));

  // same data with one column of B doubled: no longer counital
  RelRBHopf bad = s3rrb;
  for (std::size_t r = 0; r < bad.B.rows(); ++r) bad.B(r, 3) *= Scalar::from_int(q, 2);
  io::write_json_file(dir / "s3-rrb-corrupted.json", io::to_json(bad));

  io::write_json_file(dir / "s3-inversion-rb.json",
                      json{{"group", {{"ref", "s3.json"}}}, {"weight", 1}, {"map", io::to_json(inversion_map(s3))}});

  LieData sl = sl2(q);
  json lie = io::to_json(sl);
  LinearMap minus_id = LinearMap::identity(q, 3);
  for (std::size_t i = 0; i < 3; ++i) minus_id(i, i) = Scalar::from_int(q, -2);
  lie["operator"] = {{"B", io::matrix_to_json(minus_id)}, {"lambda", "2"}};
  io::write_json_file(dir / "sl2-rb.json", lie);
  return 0;
}
