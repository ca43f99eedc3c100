#pragma once

#include "vcfam/set_family.hpp"

namespace vcfam {

// All s-subsets of [n].
SetFamily full_family(int n, int s);

// {∅, {1}, {1,2}, ..., {1..n-1}}; n >= 2.
SetFamily initial_segment_family(int n);

// Adds the fresh point n+1 to every member.
SetFamily cone(const SetFamily& f);

// S ↦ S × [l] over [n·l], with (v, x) relabeled to (v-1)·l + x.
SetFamily product(const SetFamily& f, int l);

/// Products of k-subsets of Z/(k+1), one factor per coordinate.
///
/// A point (a_1, ..., a_m) ∈ {0..k}^m is element 1 + Σ a_i (k+1)^(i-1). Each
/// member omits one value t_i per coordinate, so there are (k+1)^m members
/// of size k^m.
SetFamily hypercube_family(int k, int m);

// The pairs {2t-1, 2t} for t <= m/2 together with {m-1, m}, over [m].
SetFamily base_pairs_family(int m);

// Extends each member S by every i with max(S) < i <= n+1; result over [n+1].
SetFamily recursive_step(const SetFamily& f);

// base_pairs_family(m) followed by k-1 recursive steps: (k+1)-sets over [m+k-1].
SetFamily build_Fk(int m, int k);

// A k-covering s-uniform family over [n] with VC-dimension at most k.
SetFamily covering_witness_family(int k, int s, int n);

}  // namespace vcfam
