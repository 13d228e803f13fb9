/*
 * Copyright 2026 The esp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file json_io.hpp
 * @brief JSON documents for matrices, certificates, words and relative words.
 *
 *   matrix       {"ring": "<ring>", "rows": [["<elem>", ...], ...]}
 *   certificate  {"size": m, "steps": [[i, j, "<elem>"], ...]}
 *   word         {"form": <matrix doc> | "psi:n", "ring": "<ring>", "atoms": [...]}
 *   atom         {"kind": "se", "i": .., "j": .., "a": ".."} | {"kind": "C"|"R", "v": [..]}
 *                | {"kind": "inv", "of": <atom>}
 *   relative     word fields plus {"ideal": [..], "pairs": [{"conj": {"atoms": [..]}, "core": <atom>}]}
 */

#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "esp/relative.hpp"
#include "esp/standard_form.hpp"

namespace esp {

using Json = nlohmann::ordered_json;

namespace detail {

template <typename F>
auto json_guard(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
}

inline std::size_t parse_index(const Json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 1) throw Error(Errc::parse_error, "index must be a positive integer");
  return j.get<std::size_t>();
}

}  // namespace detail

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

// ---- matrices --------------------------------------------------------------

inline Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return Json{{"ring", m.ring().text()}, {"rows", std::move(rows)}};
}

inline Matrix matrix_from_json(const Json& doc) {
  return detail::json_guard([&] {
    if (!doc.is_object()) throw Error(Errc::parse_error, "matrix document must be an object");
    const Ring r = Ring::parse(doc.at("ring").get<std::string>());
    const Json& rows = doc.at("rows");
    if (!rows.is_array()) throw Error(Errc::parse_error, "rows must be an array");
    std::vector<std::vector<Element>> grid;
    for (const auto& row : rows) {
      if (!row.is_array()) throw Error(Errc::parse_error, "each row must be an array");
      std::vector<Element> out;
      for (const auto& x : row) out.push_back(r.parse_element(x.get<std::string>()));
      grid.push_back(std::move(out));
    }
    return Matrix::from_rows(r, grid);
  });
}

// ---- certificates ----------------------------------------------------------

inline Json certificate_to_json(const ElementaryCertificate& c) {
  Json steps = Json::array();
  for (const auto& s : c.steps()) steps.push_back(Json::array({s.i, s.j, s.a.str()}));
  return Json{{"size", c.size()}, {"steps", std::move(steps)}};
}

/// The document carries no ring; entries are parsed in `r`.
inline ElementaryCertificate certificate_from_json(const Json& doc, const Ring& r) {
  return detail::json_guard([&] {
    ElementaryCertificate c(r, detail::parse_index(doc.at("size")));
    for (const auto& s : doc.at("steps")) {
      if (!s.is_array() || s.size() != 3) throw Error(Errc::parse_error, "step must be [i, j, a]");
      c.push_back(detail::parse_index(s[0]), detail::parse_index(s[1]), r.parse_element(s[2].get<std::string>()));
    }
    return c;
  });
}

// ---- atoms and words -------------------------------------------------------

inline Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

inline Vector vector_from_json(const Json& doc, const Ring& r) {
  return detail::json_guard([&] {
    if (!doc.is_array()) throw Error(Errc::parse_error, "vector must be an array");
    Vector v;
    for (const auto& x : doc) v.push_back(r.parse_element(x.get<std::string>()));
    return v;
  });
}

inline Json atom_to_json(const Atom& a) {
  switch (a.kind()) {
    case AtomKind::se: return Json{{"kind", "se"}, {"i", a.i()}, {"j", a.j()}, {"a", a.scalar().str()}};
    case AtomKind::C: return Json{{"kind", "C"}, {"v", vector_to_json(a.vec())}};
    case AtomKind::R: return Json{{"kind", "R"}, {"v", vector_to_json(a.vec())}};
    case AtomKind::inverse: return Json{{"kind", "inv"}, {"of", atom_to_json(a.inner())}};
  }
  return Json();
}

inline Atom atom_from_json(const Json& doc, const Ring& r) {
  return detail::json_guard([&] {
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "se") {
      return Atom::se(detail::parse_index(doc.at("i")), detail::parse_index(doc.at("j")),
                      r.parse_element(doc.at("a").get<std::string>()));
    }
    if (kind == "C") return Atom::C(vector_from_json(doc.at("v"), r));
    if (kind == "R") return Atom::R(vector_from_json(doc.at("v"), r));
    if (kind == "inv") return Atom::inverse(atom_from_json(doc.at("of"), r));
    throw Error(Errc::parse_error, "unknown atom kind '" + kind + "'");
  });
}

inline Json form_to_json(const SkewForm& f) {
  if (f.is_standard()) return Json("psi:" + std::to_string(f.n()));
  return matrix_to_json(f.phi());
}

/// "psi:n" (needs `ring`) or a matrix document.
inline FormPtr form_from_json(const Json& doc, const std::string& ring) {
  return detail::json_guard([&] {
    if (doc.is_string()) {
      const std::string s = doc.get<std::string>();
      if (s.rfind("psi:", 0) != 0) throw Error(Errc::parse_error, "form must be 'psi:n' or a matrix document");
      if (ring.empty()) throw Error(Errc::parse_error, "'psi:n' forms need a ring");
      std::size_t n = 0;
      try {
        n = std::stoul(s.substr(4));
      } catch (const std::exception&) {
        throw Error(Errc::parse_error, "bad form '" + s + "'");
      }
      if (n < 1) throw Error(Errc::parse_error, "psi:n needs n >= 1");
      return make_standard_form(Ring::parse(ring), n);
    }
    return make_skewform(matrix_from_json(doc));
  });
}

inline Json atoms_to_json(const std::vector<Atom>& atoms) {
  Json out = Json::array();
  for (const auto& a : atoms) out.push_back(atom_to_json(a));
  return out;
}

inline Json word_to_json(const GroupWord& w) {
  return Json{{"form", form_to_json(*w.form())}, {"ring", w.form()->ring().text()}, {"atoms", atoms_to_json(w.atoms())}};
}

inline FormPtr word_form_from_json(const Json& doc) {
  return detail::json_guard([&] {
    std::string ring = doc.contains("ring") ? doc.at("ring").get<std::string>() : std::string();
    return form_from_json(doc.at("form"), ring);
  });
}

inline GroupWord atoms_from_json(const FormPtr& form, const Json& atoms) {
  return detail::json_guard([&] {
    if (!atoms.is_array()) throw Error(Errc::parse_error, "atoms must be an array");
    GroupWord w(form);
    for (const auto& a : atoms) w.push_back(atom_from_json(a, form->ring()));
    return w;
  });
}

inline GroupWord word_from_json(const Json& doc) {
  return detail::json_guard([&] {
    FormPtr form = word_form_from_json(doc);
    return atoms_from_json(form, doc.at("atoms"));
  });
}

inline Json ideal_to_json(const Ideal& I) {
  Json out = Json::array();
  for (const auto& g : I.generators()) out.push_back(g.str());
  return out;
}

inline Ideal ideal_from_json(const Json& doc, const Ring& r) {
  return detail::json_guard([&] {
    if (!doc.is_array()) throw Error(Errc::parse_error, "ideal must be an array of elements");
    std::vector<Element> gens;
    for (const auto& g : doc) gens.push_back(r.parse_element(g.get<std::string>()));
    return Ideal::generated_by(r, std::move(gens));
  });
}

inline Json relative_word_to_json(const RelativeWord& w) {
  Json pairs = Json::array();
  for (const auto& p : w.pairs()) {
    pairs.push_back(Json{{"conj", Json{{"atoms", atoms_to_json(p.conj.atoms())}}}, {"core", atom_to_json(p.core)}});
  }
  return Json{{"form", form_to_json(*w.form())},
              {"ring", w.form()->ring().text()},
              {"ideal", ideal_to_json(w.ideal())},
              {"pairs", std::move(pairs)}};
}

inline RelativeWord relative_word_from_json(const Json& doc) {
  return detail::json_guard([&] {
    FormPtr form = word_form_from_json(doc);
    RelativeWord w(form, ideal_from_json(doc.at("ideal"), form->ring()));
    for (const auto& p : doc.at("pairs")) {
      w.push_back(atoms_from_json(form, p.at("conj").at("atoms")), atom_from_json(p.at("core"), form->ring()));
    }
    return w;
  });
}

inline Json error_to_json(const Error& e) { return Json{{"error", std::string(e.name())}, {"message", e.what()}}; }

}  // namespace esp
