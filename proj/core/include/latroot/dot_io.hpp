#pragma once

#include <string>

#include "latroot/gradedroot.hpp"
#include "latroot/plumbing.hpp"

namespace latroot {

// GraphViz output.  Roots are drawn upside down (smaller weight higher up),
// matching the usual figures; output is deterministic.
std::string dot_of_root(const LabelledGradedRoot& r);
std::string dot_of_plumbing(const PlumbingGraph& g);

}  // namespace latroot
