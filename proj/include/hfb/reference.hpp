// reference.hpp
// Strictly serial direct-summation reference path.  Every integral is a
// plain Riemann sum written out as nested loops, with no FFTs and no matrix
// products, so it is an independent oracle for the spectral/composition
// implementations (and the baseline for the benchmark comparison).
#pragma once

#include "hfb/fermi.hpp"
#include "hfb/rhs.hpp"

namespace hfb {
namespace ref {

Kernel compose(const Kernel& A, const Kernel& B);
Field conv_diag(const Field& vN, const Kernel& K);
RhsOutput rhs(const HFBState& s, const Field& vN);
FermiRhs fermi_rhs_nonlinear(const FermiState& s, const Field& v);

} // namespace ref
} // namespace hfb
