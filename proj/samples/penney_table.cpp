// Prints base -4 expansions next to their canonical expansions over
// X^2 + 2X + 2 obtained by block substitution.

#include <iostream>

#include "cnsrep/cns.hpp"
#include "cnsrep/negabase.hpp"
#include "cnsrep/penney.hpp"

int main() {
  using namespace cnsrep;
  const PenneyScheme& scheme = penney_standard();
  for (std::uint64_t i = 0; i < scheme.c(); ++i) {
    std::cout << "h_" << i << " = " << format_digits(scheme.block(i)) << '\n';
  }
  for (int z = -6; z <= 12; ++z) {
    const Representation nega = encode_negabase(z, 4);
    const Representation rep = convert(z, scheme);
    std::cout << z << " = " << pretty(nega) << " = " << pretty(rep) << "  length " << rep.length() << " = 4*("
              << nega.length() << "-1)+" << lambda(z, scheme) << '\n';
  }
}
