// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The counterexample gallery: a fixed catalogue of hand-constructed
// assignments that separate the lattice identities across dimensions and
// lattice families.  Every entry is deterministic — no randomness — and
// carries its expected verdict; the runner re-verifies each failure's
// witness point independently (membership in the larger side, absence
// from the smaller) before declaring the entry reproduced.
//
// Families:
//   * dn_fail_conv(n)             — the n-ary meet-distribution law fails
//                                   in conv:n (simplex vs. centroid).
//   * wrapped_dn_fail_pointed(n)  — its wrapped form fails in pointed:n
//                                   one dimension up.
//   * dnop_fail_conv(n)           — the dual law fails in conv:n
//                                   (reflected simplex faces).
//   * wrapped_dnop_fail_pointed(n)— its wrapped dual form fails in
//                                   pointed:n one dimension up.
//   * radon_fail(n_plus_1)        — the Radon-style inequation for
//                                   dimension n fails in conv:(n+1).
//   * relconv_d1op_fail()         — the dual law fails over a 5-point
//                                   relative-convexity ground set.
//   * relconv_wrapped_fail(n)     — the wrapped dual form fails in a
//                                   pointed relative-convexity lattice
//                                   over rational circle points.

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "convlat/check.hpp"
#include "convlat/lattice.hpp"
#include "convlat/term.hpp"

namespace convlat {

/// One gallery item: a lattice, an identity, a concrete assignment, and
/// the verdict the construction is designed to produce.
struct GalleryEntry {
  std::string name;  // "dn_fail_conv:2", "relconv_d1op_fail", ...
  std::shared_ptr<const LatticeHandle> lattice;
  Identity identity;
  Assignment assignment;
  Verdict expected = Verdict::Fails;
};

/// Result of running one entry.  `pass` requires the observed verdict to
/// match the expectation and, for failures, the witness point to
/// re-verify against both evaluated sides.
struct GalleryResult {
  std::string entry;
  std::string expected;
  std::string observed;
  std::optional<VecQ> witness;
  bool pass = false;
};

/// The n-ary meet-distribution law over a simplex and its centroid:
/// Fails in conv:n.  n in 1..3.
GalleryEntry dn_fail_conv(int n);

/// The wrapped meet-distribution law over the cone lift of the
/// (n-1)-dimensional simplex construction: Fails in pointed:n.  n in 2..3.
GalleryEntry wrapped_dn_fail_pointed(int n);

/// The dual law over a simplex and the faces of its point reflection:
/// Fails in conv:n.  n in 1..3.
GalleryEntry dnop_fail_conv(int n);

/// The wrapped dual law over the cone lift of the (n-1)-dimensional
/// reflected-simplex construction: Fails in pointed:n.  n in 2..3.
GalleryEntry wrapped_dnop_fail_pointed(int n);

/// The Radon-style inequation for dimension n over an (n+1)-simplex and
/// the reflected singleton vertices: Fails in conv:(n+1).  n_plus_1 in
/// 2..3.
GalleryEntry radon_fail(int n_plus_1);

/// The dual law over the ground set {0, +-e1, +-e2}: Fails in the
/// relative-convexity lattice because antipodal pairs pull the origin
/// into both joins on the right.
GalleryEntry relconv_d1op_fail();

/// The wrapped dual law over 2n+6 rational unit-circle points in
/// antipodal pairs, the origin, and an external point r on the ray
/// through one of them: Fails in the pointed relative-convexity lattice.
/// The builder asserts the combinatorial surrogate conditions exactly
/// (unit norms, antipodal pairing, convex position, closedness of every
/// assignment set, r on the ray through the distinguished point) before
/// the entry is returned.  n in 1..2.
GalleryEntry relconv_wrapped_fail(int n);

/// Every entry above at every supported parameter, in catalogue order.
std::vector<GalleryEntry> all_gallery_entries();

/// Runs one entry: checks the identity on the fixed assignment, compares
/// verdicts, and for an expected failure re-verifies the reported
/// witness point by exact membership in both evaluated sides.
GalleryResult run_gallery_entry(const GalleryEntry& e);

/// Runs every catalogue entry whose name contains `filter` (all of them
/// when `filter` is empty), in catalogue order.
std::vector<GalleryResult> run_gallery(const std::string& filter = "");

}  // namespace convlat
