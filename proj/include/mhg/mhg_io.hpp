#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "mhg/hypergraph.hpp"

namespace mhg {

inline constexpr int kMhgFormatVersion = 1;

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message);
    int line() const { return line_; }

private:
    int line_;
};

// MHG v1 text format, one record per line, '#' starts a comment:
//   MHG 1
//   V <count>
//   L <index> (<c1>,<c2>,...)     (optional; all vertices or none)
//   C <i1> <i2> <i3> [...]
//   D <i1> <i2> [...]
// The writer is canonical: L lines ascending by index, C lines before D
// lines, edge lines sorted lexicographically, indices ascending within a
// line. The parser accepts records in any order after the V line and
// tolerates unsorted indices, but rejects duplicate edges.
std::string write_mhg(const MixedHypergraph& h);
MixedHypergraph parse_mhg(std::string_view text);

}  // namespace mhg
