#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mhg/coloring.hpp"
#include "mhg/hypergraph.hpp"
#include "mhg/spec_set.hpp"

namespace mhg {

// The four generated families.
//   Full  : complete coordinate construction (all coordinate D-pairs and
//           C-triples).
//   FullG : Full restricted to X minus the vertex (n2,1,...,1); requires
//           n1-1 in S.
//   DMin  : minimum-D-edge one-realization (sparse D family, full C family),
//           restricted as above when n1-1 in S.
//   CMin  : minimum-C-edge one-realization (sparse C family, full D family),
//           dispatching on whether n1-1 and ns+1 lie in S.
enum class Variant { Full, FullG, DMin, CMin };

std::string to_string(Variant v);
std::optional<Variant> variant_from_string(std::string_view name);

// All vertices of the coordinate construction, in canonical order:
// diagonals (i,...,i) for i in [ns-1] ascending; then for t = s down to 2
// and j = n_t .. n_{t-1}-1 the vertex (j,..,j,n_t,..,n_s) followed by
// (j,..,j,1,..,1); finally (n1,...,ns). Size is exactly 2*n1 - ns.
std::vector<Vertex> vertex_set(const SpecSet& s);

// All 2-subsets whose vertices differ in every coordinate.
EdgeSet full_d_edges(const SpecSet& s);
// All 3-subsets with exactly two distinct values in every coordinate.
EdgeSet full_c_edges(const SpecSet& s);

// The sparse D family: diagonal pairs, diagonal-to-(..,ns) pairs, and the
// coordinate-dominated (..,1)/(..,ns) pairs. Exactly n1(n1-1)/2 edges.
EdgeSet d_star_edges(const SpecSet& s);

// The sparse C family (three union families along the construction's two
// vertex chains). Exactly 2*n1 - 2*ns edges. Requires s >= 2.
EdgeSet c_star_edges(const SpecSet& s);

// The partition of `vertices` grouping by the i-th coordinate (1-based).
// On the full vertex set of s this has exactly n_i classes.
Coloring canonical_coloring(const SpecSet& s, const std::vector<Vertex>& vertices,
                            int coordinate);

// Vertex subset restriction keeping exactly the edges inside `keep`;
// vertices are reindexed preserving order.
MixedHypergraph derived_subhypergraph(const MixedHypergraph& h,
                                      const std::vector<int>& keep);

// Build one of the four variants for s. Edge counts are asserted against
// delta_d / delta_c at construction time.
MixedHypergraph build(const SpecSet& s, Variant v);

// The expected strict colorings of build(s, v): one coordinate projection
// per element of the effective spec, plus, for the CMin reduced-spec
// branches, one extra coloring splitting the (..,1) chain off the last
// coordinate class.
std::vector<Coloring> canonical_strict_colorings(const SpecSet& s, Variant v);

// Closed-form extremal bounds: minimum vertices / D-edges / C-edges over
// one-realizations of s.
int delta(const SpecSet& s);
int delta_d(const SpecSet& s);
int delta_c(const SpecSet& s);

}  // namespace mhg
