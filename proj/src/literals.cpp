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

#include "hv/literals.hpp"

#include <cmath>
#include <random>

#include "hv/errors.hpp"

namespace hv::literals {

namespace {

[[noreturn]] void fail(const std::string &where, const std::string &what) {
  throw ConfigInvalid(where + ": " + what);
}

double number(const json &j, const std::string &where) {
  if (!j.is_number()) fail(where, "expected a number, got " + j.dump());
  return j.get<double>();
}

long integer(const json &j, const std::string &where) {
  if (!j.is_number_integer()) fail(where, "expected an integer, got " + j.dump());
  return j.get<long>();
}

std::uint64_t seed_of(const json &obj, const std::string &where) {
  if (!obj.contains("seed")) fail(where, "missing \"seed\"");
  const long s = integer(obj.at("seed"), where + ".seed");
  if (s < 0) fail(where + ".seed", "must be non-negative");
  return static_cast<std::uint64_t>(s);
}

std::vector<double> numbers(const json &j, const std::string &where) {
  if (!j.is_array() || j.empty()) fail(where, "expected a non-empty array");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(number(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

ComplexVector amplitudes(const json &j, const std::string &where) {
  if (!j.is_array() || j.empty()) fail(where, "expected a non-empty array");
  ComplexVector z(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    z[static_cast<Eigen::Index>(i)] =
        parse_complex(j[i], where + "[" + std::to_string(i) + "]");
  }
  return z;
}

void check_dim(int got, int n, const std::string &where) {
  if (n > 0 && got != n) {
    fail(where, "dimension " + std::to_string(got) + " does not match n = " +
                    std::to_string(n));
  }
}

const json &single_key(const json &j, const char *key, const std::string &where) {
  check_keys(j, {key}, where);
  return j.at(key);
}

}  // namespace

void check_keys(const json &obj, std::initializer_list<const char *> allowed,
                const std::string &where) {
  if (!obj.is_object()) fail(where, "expected an object");
  for (const auto &item : obj.items()) {
    bool ok = false;
    for (const char *k : allowed) ok = ok || item.key() == k;
    if (!ok) fail(where, "unknown key \"" + item.key() + "\"");
  }
}

Complex parse_complex(const json &j, const std::string &where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) {
    return {number(j[0], where + ".re"), number(j[1], where + ".im")};
  }
  fail(where, "expected a number or [re, im]");
}

HermitianOperator parse_operator(const json &j, int n, const std::string &where) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name == "sigma_x" || name == "sigma_y" || name == "sigma_z") {
      check_dim(2, n, where);
      if (name == "sigma_x") return HermitianOperator::pauli_x();
      if (name == "sigma_y") return HermitianOperator::pauli_y();
      return HermitianOperator::pauli_z();
    }
    if (name == "identity" || name == "zero") {
      if (n <= 0) fail(where, "\"" + name + "\" needs the dimension n");
      return name == "identity" ? HermitianOperator::identity(n)
                                : HermitianOperator::zero(n);
    }
    fail(where, "unknown operator name \"" + name + "\"");
  }
  if (!j.is_object()) fail(where, "expected a string or an object");

  try {
    if (j.contains("entries")) {
      const json &rows = single_key(j, "entries", where);
      if (!rows.is_array() || rows.empty()) fail(where, "entries must be rows");
      const int m = static_cast<int>(rows.size());
      check_dim(m, n, where);
      ComplexMatrix a(m, m);
      for (int r = 0; r < m; ++r) {
        const std::string rw = where + ".entries[" + std::to_string(r) + "]";
        const ComplexVector row = amplitudes(rows[r], rw);
        if (row.size() != m) fail(rw, "row length must equal the row count");
        a.row(r) = row.transpose();
      }
      return HermitianOperator(a);
    }
    if (j.contains("diag")) {
      const std::vector<double> d = numbers(single_key(j, "diag", where), where);
      check_dim(static_cast<int>(d.size()), n, where);
      return HermitianOperator::diag(d);
    }
    if (j.contains("eigenvalues")) {
      check_keys(j, {"eigenvalues", "seed"}, where);
      const std::vector<double> d = numbers(j.at("eigenvalues"), where);
      check_dim(static_cast<int>(d.size()), n, where);
      std::mt19937_64 rng(seed_of(j, where));
      return random_hermitian_with_spectrum(d, rng);
    }
    if (j.contains("projector")) {
      const ComplexVector u = amplitudes(single_key(j, "projector", where), where);
      check_dim(static_cast<int>(u.size()), n, where);
      if (u.norm() == 0.0) fail(where, "projector vector must be non-zero");
      return HermitianOperator::ray_projector(u / u.norm());
    }
    if (j.contains("random_projector")) {
      check_keys(j, {"random_projector", "seed"}, where);
      if (n <= 0) fail(where, "random_projector needs the dimension n");
      const long rank = integer(j.at("random_projector"), where);
      if (rank < 0 || rank > n) fail(where, "rank out of range");
      std::mt19937_64 rng(seed_of(j, where));
      return random_projector(n, static_cast<int>(rank), rng);
    }
  } catch (const NotHermitian &e) {
    fail(where, e.what());
  }
  fail(where, "unrecognized operator literal " + j.dump());
}

StateVector parse_state(const json &j, int n, const std::string &where) {
  if (!j.is_object()) fail(where, "expected an object");
  if (j.contains("amplitudes")) {
    const ComplexVector z = amplitudes(single_key(j, "amplitudes", where), where);
    check_dim(static_cast<int>(z.size()), n, where);
    if (z.norm() == 0.0) fail(where, "amplitudes must be non-zero");
    return StateVector::from_complex(z);
  }
  if (n <= 0) fail(where, "state literal needs the dimension n");
  if (j.contains("basis")) {
    const long k = integer(single_key(j, "basis", where), where);
    if (k < 0 || k >= n) fail(where, "basis index out of range");
    return StateVector::basis(n, static_cast<int>(k));
  }
  if (j.contains("random")) {
    const long s = integer(single_key(j, "random", where), where);
    if (s < 0) fail(where, "seed must be non-negative");
    std::mt19937_64 rng(static_cast<std::uint64_t>(s));
    return random_state(n, rng);
  }
  if (j.contains("beta")) {
    const double b = number(single_key(j, "beta", where), where);
    if (n < 2) fail(where, "beta states need n >= 2");
    ComplexVector z = ComplexVector::Zero(n);
    z[0] = std::cos(b);
    z[1] = std::sin(b);
    return StateVector::from_complex(z);
  }
  fail(where, "unrecognized state literal " + j.dump());
}

Context parse_context(const json &j, const std::string &where) {
  if (j.is_null()) return {};
  if (j.is_string()) {
    if (j.get<std::string>() == "identity") return {};
    fail(where, "unknown context name " + j.dump());
  }
  if (j.is_array()) {
    Context out;
    for (std::size_t i = 0; i < j.size(); ++i) {
      out = out.then(parse_context(j[i], where + "[" + std::to_string(i) + "]"));
    }
    return out;
  }
  if (!j.is_object()) fail(where, "expected a context literal");
  try {
    if (j.contains("rigid")) {
      const json &body = single_key(j, "rigid", where);
      check_keys(body, {"offset"}, where + ".rigid");
      if (!body.contains("offset")) fail(where + ".rigid", "missing \"offset\"");
      const json &off = body.at("offset");
      if (off.is_string()) {
        if (off.get<std::string>() != "per-ray-hash") {
          fail(where + ".rigid.offset", "expected a number or \"per-ray-hash\"");
        }
        return Context::rigid_per_ray_hash();
      }
      return Context::rigid(number(off, where + ".rigid.offset"));
    }
    if (j.contains("exchange")) {
      const json &body = single_key(j, "exchange", where);
      const std::string w = where + ".exchange";
      check_keys(body, {"k", "perm"}, w);
      if (!body.contains("perm")) fail(w, "missing \"perm\"");
      const json &pj = body.at("perm");
      if (!pj.is_array()) fail(w + ".perm", "expected an array");
      std::vector<int> perm;
      for (const json &p : pj) perm.push_back(static_cast<int>(integer(p, w + ".perm")));
      if (body.contains("k") &&
          integer(body.at("k"), w + ".k") != static_cast<long>(perm.size())) {
        fail(w, "k must equal the length of perm");
      }
      return Context::exchange(perm);
    }
  } catch (const InvalidContext &e) {
    fail(where, e.what());
  }
  fail(where, "unrecognized context literal " + j.dump());
}

BorelSet parse_borel(const json &j, const std::string &where) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "all") return BorelSet::all();
    if (s == "empty") return BorelSet::empty();
    fail(where, "unknown set name " + j.dump());
  }
  if (j.is_array()) {
    BorelSet out;
    for (std::size_t i = 0; i < j.size(); ++i) {
      out = out.unite(parse_borel(j[i], where + "[" + std::to_string(i) + "]"));
    }
    return out;
  }
  if (!j.is_object()) fail(where, "expected a set literal");
  if (j.contains("points")) {
    return BorelSet::points(numbers(single_key(j, "points", where), where));
  }
  if (j.contains("at_most")) {
    return BorelSet::at_most(number(single_key(j, "at_most", where), where));
  }
  for (const char *key : {"closed", "half_open"}) {
    if (!j.contains(key)) continue;
    const std::vector<double> v = numbers(single_key(j, key, where), where);
    if (v.size() != 2 || !(v[0] <= v[1])) fail(where, "expected [lo, hi] with lo <= hi");
    return std::string(key) == "closed" ? BorelSet::closed(v[0], v[1])
                                        : BorelSet::half_open(v[0], v[1]);
  }
  fail(where, "unrecognized set literal " + j.dump());
}

PhaseSpeed parse_phase_speed(const json &j, int n, const std::string &where) {
  if (j.is_number()) return PhaseSpeed::constant(j.get<double>());
  check_keys(j, {"constant", "terms"}, where);
  PhaseSpeed h = PhaseSpeed::constant(
      j.contains("constant") ? number(j.at("constant"), where + ".constant") : 0.0);
  if (j.contains("terms")) {
    const json &terms = j.at("terms");
    if (!terms.is_array()) fail(where + ".terms", "expected an array");
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const std::string w = where + ".terms[" + std::to_string(i) + "]";
      check_keys(terms[i], {"coef", "operator", "power"}, w);
      if (!terms[i].contains("operator")) fail(w, "missing \"operator\"");
      const double coef =
          terms[i].contains("coef") ? number(terms[i].at("coef"), w + ".coef") : 1.0;
      const long power =
          terms[i].contains("power") ? integer(terms[i].at("power"), w + ".power") : 1;
      if (power < 1) fail(w + ".power", "must be >= 1");
      h = h.plus(PhaseSpeed::expectation(
          parse_operator(terms[i].at("operator"), n, w + ".operator"), coef,
          static_cast<int>(power)));
    }
  }
  return h;
}

}  // namespace hv::literals
