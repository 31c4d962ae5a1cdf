#pragma once

// JSON encoding of states, data and reconstruction dumps. Rational scalars are
// written as "p/q" strings, binary64 scalars as JSON numbers.

#include "advect/datum.hpp"
#include "advect/reconstruction.hpp"
#include "advect/scalar.hpp"
#include "advect/state.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace advect {

using json = nlohmann::json;

template <Scalar T>
json scalar_to_json(const T& v) {
  if constexpr (is_exact_v<T>) {
    return to_string(v);
  } else {
    return v;
  }
}

/// Accepts "p/q" or decimal strings and JSON numbers in either mode.
template <Scalar T>
T scalar_from_json(const json& j) {
  if (j.is_string()) return scalar_traits<T>::parse(j.get<std::string>());
  if (j.is_number_integer()) return from_int<T>(j.get<std::int64_t>());
  if (j.is_number()) {
    if constexpr (is_exact_v<T>) {
      // decimal text, not the binary64 approximation
      try {
        return from_ratio<T>(parse_ratio(j.dump()));
      } catch (const std::exception&) {
        return scalar_traits<T>::from_double(j.get<double>());
      }
    } else {
      return j.get<double>();
    }
  }
  throw std::invalid_argument("expected a number or a \"p/q\" string, got " + j.dump());
}

inline Phase parse_phase(const std::string& s) {
  if (s == "integer_grid" || s == "integer") return Phase::integer_grid;
  if (s == "shifted_left" || s == "shifted") return Phase::shifted_left;
  throw std::invalid_argument("unknown phase '" + s + "'");
}

template <Scalar T>
json tail_to_json(const TailSpec<T>& t) {
  return {{"anchor", scalar_to_json(t.anchor)}, {"step", scalar_to_json(t.step)}};
}

template <Scalar T>
json state_to_json(const GridState<T>& s) {
  json values = json::array();
  for (const auto& v : s.values()) values.push_back(scalar_to_json(v));
  json j = {{"kind", s.is_periodic() ? "periodic" : "infinite"},
            {"arithmetic", scalar_traits<T>::name},
            {"lambda", scalar_to_json(s.lambda())},
            {"phase", to_string(s.phase())},
            {"window_start", s.window_start()},
            {"values", std::move(values)}};
  if (!s.is_periodic()) {
    j["left_tail"] = tail_to_json(s.left_tail());
    j["right_tail"] = tail_to_json(s.right_tail());
  }
  return j;
}

/// Reads a state. Tails default to constant; an explicit anchor must agree
/// with the window edge. "lambda" defaults to 1/2.
template <Scalar T>
GridState<T> state_from_json(const json& j) {
  if (!j.contains("values") || !j["values"].is_array()) throw std::invalid_argument("state JSON needs a \"values\" array");
  std::vector<T> values;
  for (const auto& v : j["values"]) values.push_back(scalar_from_json<T>(v));
  const T lambda = j.contains("lambda") ? scalar_from_json<T>(j["lambda"]) : from_ratio<T>(Ratio{1, 2});
  const Phase phase = parse_phase(j.value("phase", std::string("integer_grid")));
  const std::string kind = j.value("kind", std::string("infinite"));
  if (kind == "periodic") return GridState<T>::periodic(std::move(values), lambda, phase);
  if (kind != "infinite") throw std::invalid_argument("unknown state kind '" + kind + "'");
  if (values.empty()) throw std::invalid_argument("infinite state needs a non-empty window");
  auto tail = [&](const char* key, const T& edge) {
    TailSpec<T> t{edge, T(0)};
    if (j.contains(key)) {
      const auto& tj = j[key];
      if (tj.contains("anchor")) t.anchor = scalar_from_json<T>(tj["anchor"]);
      if (tj.contains("step")) t.step = scalar_from_json<T>(tj["step"]);
    }
    return t;
  };
  const auto left = tail("left_tail", values.front());
  const auto right = tail("right_tail", values.back());
  return GridState<T>::infinite(j.value("window_start", std::int64_t{0}), std::move(values), left, right, lambda,
                                phase);
}

template <Scalar T>
json reconstruction_to_json(const ReconstructionProfile<T>& profile) {
  json out = json::array();
  for (const auto& c : profile.cells()) {
    out.push_back({{"j", c.j},
                   {"left", scalar_to_json(c.left_value)},
                   {"right", scalar_to_json(c.right_value)},
                   {"d", scalar_to_json(c.d)},
                   {"convention", to_string(c.convention)}});
  }
  return out;
}

/// Datum pieces: {"begin","end","type": constant|affine|sine|cossin, ...}.
template <Scalar T>
PiecewiseDatum<T> datum_from_json(const json& j) {
  if (!j.contains("pieces") || !j["pieces"].is_array()) throw std::invalid_argument("datum JSON needs a \"pieces\" array");
  std::vector<Piece<T>> pieces;
  for (const auto& p : j["pieces"]) {
    Piece<T> piece{scalar_from_json<T>(p.at("begin")), scalar_from_json<T>(p.at("end")), expr::Constant<T>{T(0)}};
    const std::string type = p.value("type", std::string("constant"));
    if (type == "constant") {
      piece.expression = expr::Constant<T>{scalar_from_json<T>(p.at("value"))};
    } else if (type == "affine") {
      piece.expression = expr::Affine<T>{scalar_from_json<T>(p.at("slope")), scalar_from_json<T>(p.at("intercept"))};
    } else if (type == "sine") {
      piece.expression = expr::Sine{p.value("amplitude", 1.0), p.value("frequency", 1.0), p.value("phase", 0.0)};
    } else if (type == "cossin") {
      piece.expression = expr::CosSin{p.value("amplitude", 1.0), p.value("f1", 1.0), p.value("p1", 0.0),
                                      p.value("f2", 1.0), p.value("p2", 0.0)};
    } else {
      throw std::invalid_argument("unknown datum piece type '" + type + "'");
    }
    pieces.push_back(std::move(piece));
  }
  const std::string ext = j.value("extension", std::string("periodic"));
  Extension extension = Extension::periodic;
  if (ext == "constant_tails") {
    extension = Extension::constant_tails;
  } else if (ext == "none") {
    extension = Extension::none;
  } else if (ext != "periodic") {
    throw std::invalid_argument("unknown datum extension '" + ext + "'");
  }
  return PiecewiseDatum<T>(std::move(pieces), extension, j.value("name", std::string("inline")));
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("invalid JSON in '" + path + "': " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace advect
