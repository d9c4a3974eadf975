// Lists the Rota-Baxter operators of weight 1 on S3 with their derived
// groups and skew-brace verdicts.

#include "hopfrb/hopfrb.hpp"

#include <iostream>

using namespace hopfrb;

int main() {
  GroupTable s3 = symmetric_group_3();
  auto ops = enumerate_rb(s3, 1);
  std::cout << ops.size() << " operators on " << s3.name() << "\n";
  for (const auto& b : ops) {
    std::cout << "  ";
    for (Elem g = 0; g < s3.order(); ++g) std::cout << s3.labels()[g] << "->" << s3.labels()[b(g)] << " ";
    auto dg = derived_group(s3, b);
    auto circ = circ_from_rrb(s3, s3.op(), b);
    std::cout << "| derived group abelian: " << (dg.group && dg.group->is_abelian() ? "yes" : "no")
              << " | skew brace: " << (circ.report.passed() ? "yes" : "no") << "\n";
  }
}
