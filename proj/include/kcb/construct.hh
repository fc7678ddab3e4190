#pragma once

#include <kcb/graph.hh>
#include <kcb/params.hh>

namespace kcb::construct {

using params::Int;
using params::ParamSet;

/// u_i adjacent to v_{(floor(i/x)*y + alpha) mod m}, alpha in [a]. Always
/// (a,b)-regular; k-critical exactly when c = m.
auto construct_g1(const ParamSet & params) -> BipartiteGraph;

/// u_i adjacent to v_{(ceil(i*y/x) + alpha) mod m}, alpha in [a]. Always
/// (a,b)-regular and k-critical.
auto construct_g2(const ParamSet & params) -> BipartiteGraph;

/// As construct_g2 with neighbours spaced s apart: v_{(ceil(i*y/x) + s*alpha) mod m}.
/// Throws InvalidStep unless s divides x.
auto construct_g2_step(const ParamSet & params, Int step) -> BipartiteGraph;

/// The same formula without the divisibility gate. The result carries no
/// guarantee at all; intended for exploration only.
auto construct_g2_step_unchecked(const ParamSet & params, Int step) -> BipartiteGraph;

/// An (a,b)-regular graph that is not k-critical, for the c = m case with
/// a < m-1 (Inapplicable otherwise). B = {v_0, v_{m-1}} has |N(B)| = n-m+1.
auto construct_negative(const ParamSet & params) -> BipartiteGraph;

/// For n > m > 1 with m(n-m+1)/n not integral: u_i adjacent to
/// v_{(ceil(i*m/n) + alpha) mod m}, alpha in [ceil(m(n-m+1)/n)].
/// Throws IsBiregularCase when the ratio is integral.
auto construct_conjecture(Int n, Int m) -> BipartiteGraph;

/// U-side degree used by construct_conjecture.
auto conjecture_degree(Int n, Int m) -> Int;

/// G plus k = n-m new V vertices (indices m..n-1) adjacent to all of U.
/// Throws ShapeError when n < m.
auto tilde(const BipartiteGraph & graph) -> BipartiteGraph;

} // namespace kcb::construct
