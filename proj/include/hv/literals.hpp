// Copyright 2026 The hv Authors - All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HV_LITERALS_HPP
#define HV_LITERALS_HPP

#include <initializer_list>
#include <string>

#include <json.hpp>

#include "hv/context.hpp"
#include "hv/dynamics.hpp"
#include "hv/operators.hpp"

namespace hv::literals {

using json = nlohmann::json;

/// Throws ConfigInvalid naming the first key of `obj` outside `allowed`.
void check_keys(const json &obj, std::initializer_list<const char *> allowed,
                const std::string &where);

/// A number, or a [re, im] pair.
Complex parse_complex(const json &j, const std::string &where);

/// Operator literals:
///   "sigma_x" | "sigma_y" | "sigma_z" | "identity" | "zero"
///   {"entries": [[z, ...], ...]}
///   {"diag": [x, ...]}
///   {"eigenvalues": [x, ...], "seed": k}     (seeded Haar conjugation)
///   {"projector": [z, ...]}                  (onto one line)
///   {"random_projector": rank, "seed": k}
/// `n` > 0 pins the dimension.
HermitianOperator parse_operator(const json &j, int n,
                                 const std::string &where = "operator");

/// State literals, always mapped onto the sphere of radius sqrt(2):
///   {"amplitudes": [z, ...]} | {"basis": k} | {"random": seed}
///   {"beta": b}   (sqrt(2)(cos b e1 + sin b e2), n >= 2)
StateVector parse_state(const json &j, int n, const std::string &where = "state");

/// Context literals: null | "identity" | {"rigid": {"offset": x}} |
/// {"rigid": {"offset": "per-ray-hash"}} | {"exchange": {"k": k, "perm": [...]}}
/// or an array of these, applied left to right.
Context parse_context(const json &j, const std::string &where = "context");

/// Borel literals: "all" | "empty" | {"points": [...]} | {"at_most": s} |
/// {"closed": [lo, hi]} | {"half_open": [lo, hi]} or an array (union).
BorelSet parse_borel(const json &j, const std::string &where = "set");

/// Phase speed literals: a number, or
/// {"constant": c, "terms": [{"coef": a, "operator": op, "power": p}, ...]}.
PhaseSpeed parse_phase_speed(const json &j, int n,
                             const std::string &where = "phase_speed");

}  // namespace hv::literals

#endif  // HV_LITERALS_HPP
