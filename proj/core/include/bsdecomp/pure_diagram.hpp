#pragma once

#include "bsdecomp/diagram.hpp"
#include "bsdecomp/degree_sequence.hpp"

namespace bsdecomp {

/// Normalized pure diagram of type d: one positive entry per column,
/// value prod_{k != i} 1/|d_i - d_k| at (i, d_i).
Diagram pure_diagram(const DegreeSequence& d);

}  // namespace bsdecomp
