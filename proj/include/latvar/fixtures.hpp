#pragma once

#include "latvar/lattice.hpp"

namespace latvar {

// The bundled 13-element modular lattice and its distinguished sublattices.
// Removing any of the doubly irreducible elements a1..a6 yields the three
// maximal-sublattice shapes t2/t3/t4 (up to isomorphism).
FiniteLattice fixture_t1();
FiniteLattice fixture_t2();  // t1 minus a5
FiniteLattice fixture_t3();  // t1 minus a6
FiniteLattice fixture_t4();  // t1 minus a3, with q,v renamed t1,t2
FiniteLattice fixture_s1();  // t1 minus {a2,a3}
FiniteLattice fixture_s2();  // t1 minus {a5,a6}
FiniteLattice fixture_s0();  // t1 minus {a2,a3,a5,a6}

// Induced lattice on the complement of the named elements.
FiniteLattice remove_elements(const FiniteLattice& l,
                              const std::vector<std::string>& names);

}  // namespace latvar
