// io.hpp
// Binary serialization of states and time traces (raw little-endian doubles,
// bit-exact round trips on the x86-64 targets this builds for) plus small
// text/CSV helpers.  No wall-clock data ever enters these files, so reruns
// of the same configuration are byte identical.
#pragma once

#include <string>

#include "hfb/conserved.hpp"
#include "hfb/trace.hpp"

namespace hfb {

void save_state(const std::string& path, const HFBState& s);
HFBState load_state(const std::string& path);

void save_trace(const std::string& path, const SpaceTimeTrace& tr);
SpaceTimeTrace load_trace(const std::string& path);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

// one row per report: t, mass, energy, then the energy summands (%.17g)
std::string conserved_csv(const std::vector<ConservedReport>& series,
                          double dt_between);

} // namespace hfb
