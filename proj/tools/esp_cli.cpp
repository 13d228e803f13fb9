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

// esp command-line front end. Every command prints one JSON document on
// stdout. Exit codes: 0 checks pass, 1 a check failed, 2 usage or parse
// error, 3 ring or ideal unsupported for the operation.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "esp/esp.hpp"

namespace {

using esp::Errc;
using esp::Json;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::parse_error: return 2;
    case Errc::unsupported_ring:
    case Errc::undecidable_ideal:
    case Errc::not_local_ring:
    case Errc::not_halvable:
    case Errc::not_polynomial_ring: return 3;
    default: return 1;
  }
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

esp::Vector parse_vector(const esp::Ring& r, const std::string& text) {
  esp::Vector v;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    v.push_back(r.parse_element(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return v;
}

/// "psi:n" with --ring, or a path to a matrix document.
esp::FormPtr load_form(const std::string& source, const std::string& ring) {
  if (source.rfind("psi:", 0) == 0) {
    if (ring.empty()) throw esp::Error(Errc::parse_error, "psi:n needs --ring");
    return esp::form_from_json(Json(source), ring);
  }
  return esp::make_skewform(esp::matrix_from_json(esp::read_json_file(source)));
}

struct Options {
  std::string file;
  std::string ring;
  std::string kind;
  std::string form;
  std::string v;
  std::string a;
  std::string suite;
  std::string ideal;
  std::string gamma;
  std::string delta;
  std::size_t n = 2;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t trials = 20;
  std::size_t steps = 6;
  std::size_t min_len = 1;
  std::size_t max_len = 4;
  std::uint64_t seed = 1;
};

int cmd_pfaffian(const Options& o) {
  esp::Matrix m = esp::matrix_from_json(esp::read_json_file(o.file));
  emit(Json{{"pfaffian", esp::pfaffian(m).str()}});
  return 0;
}

int cmd_se(const Options& o) {
  const esp::Ring r = esp::Ring::parse(o.ring);
  esp::Matrix m = esp::make_se(o.n, o.i, o.j, r.parse_element(o.a));
  const bool ok = esp::sp_check(esp::make_psi(r, o.n), m);
  emit(Json{{"n", o.n}, {"i", o.i}, {"j", o.j}, {"a", r.parse_element(o.a).str()},
            {"matrix", esp::matrix_to_json(m)}, {"sp_check", ok}});
  return ok ? 0 : 1;
}

int cmd_gen(const Options& o) {
  esp::FormPtr f = load_form(o.form, o.ring);
  if (o.kind != "C" && o.kind != "R") throw esp::Error(Errc::parse_error, "--kind must be C or R");
  esp::Vector v = parse_vector(f->ring(), o.v);
  esp::Matrix m = o.kind == "C" ? f->C(v) : f->R(v);
  const bool ok = esp::sp_check(f->phi(), m);
  emit(Json{{"kind", o.kind}, {"v", esp::vector_to_json(v)}, {"matrix", esp::matrix_to_json(m)}, {"sp_check", ok}});
  return ok ? 0 : 1;
}

int cmd_reduce(const Options& o) {
  esp::Matrix phi = esp::matrix_from_json(esp::read_json_file(o.file));
  emit(esp::certificate_to_json(esp::reduce_to_psi_corner(phi)));
  return 0;
}

int cmd_verify(const Options& o) {
  esp::TrialConfig cfg{o.ring.empty() ? "zmod:9" : o.ring, o.n, o.trials, o.seed, o.min_len, o.max_len, o.ideal};
  Json report = esp::run_suite(o.suite, cfg);
  emit(report);
  return report["passed"].get<bool>() ? 0 : 1;
}

int cmd_factor_relative(const Options& o) {
  esp::GroupWord w = esp::word_from_json(esp::read_json_file(o.file));
  const esp::Ideal I = esp::Ideal::parse(w.form()->ring(), o.ideal);
  esp::RelativeWord rw = esp::relative_factorize(w, I);
  if (!(rw.eval() == w.eval())) throw esp::Error(Errc::hypothesis_not_met, "factorization does not evaluate to the input");
  emit(esp::relative_word_to_json(rw));
  return 0;
}

int cmd_witness(const Options& o) {
  esp::FormPtr f = load_form(o.form, o.ring);
  Json gdoc = esp::read_json_file(o.gamma);
  esp::GammaInput gamma = gdoc.contains("atoms") ? esp::GammaInput(esp::atoms_from_json(f, gdoc.at("atoms")))
                                                 : esp::GammaInput(esp::matrix_from_json(gdoc));
  Json ddoc = esp::read_json_file(o.delta);
  std::optional<esp::Ideal> ideal;
  if (!o.ideal.empty()) ideal = esp::Ideal::parse(f->ring(), o.ideal);
  esp::DeltaInput delta = esp::GroupWord(f);
  if (ddoc.contains("pairs")) {
    esp::RelativeWord rw(f, esp::ideal_from_json(ddoc.at("ideal"), f->ring()));
    for (const auto& p : ddoc.at("pairs")) {
      rw.push_back(esp::atoms_from_json(f, p.at("conj").at("atoms")), esp::atom_from_json(p.at("core"), f->ring()));
    }
    delta = rw;
  } else {
    delta = esp::atoms_from_json(f, ddoc.at("atoms"));
  }
  Json report = esp::normality_witness(f, gamma, delta, ideal);
  emit(report);
  return report["passed"].get<bool>() ? 0 : 1;
}

int cmd_randform(const Options& o) {
  const esp::Ring r = esp::Ring::parse(o.ring);
  esp::FormPtr f = esp::random_pf1_form(r, o.n, o.steps, o.seed);
  Json doc = esp::matrix_to_json(f->phi());
  doc["n"] = o.n;
  doc["steps"] = o.steps;
  doc["seed"] = o.seed;
  emit(doc);
  return 0;
}

int cmd_selftest(const Options& o) {
  Json reports = Json::array();
  bool passed = true;
  for (const auto& ring : esp::default_rings()) {
    const esp::Ring r = esp::Ring::parse(ring);
    for (const auto& suite : esp::suite_names()) {
      if (suite == "reduce" && (r.is_polynomial() || !r.is_local())) continue;
      esp::TrialConfig cfg{ring, 2, o.trials, o.seed, 1, 3, ""};
      Json report = esp::run_suite(suite, cfg);
      passed = passed && report["passed"].get<bool>();
      reports.push_back(std::move(report));
    }
  }
  emit(Json{{"seed", o.seed}, {"trials", o.trials}, {"passed", passed}, {"reports", std::move(reports)}});
  return passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact elementary symplectic group toolkit"};
  app.require_subcommand(1);
  Options o;

  auto* pf = app.add_subcommand("pfaffian", "Pfaffian of a skew matrix document");
  pf->add_option("file", o.file, "matrix JSON")->required();

  auto* se = app.add_subcommand("se", "Elementary symplectic generator se_ij(a) for psi_n");
  se->add_option("--n", o.n)->required();
  se->add_option("--i", o.i)->required();
  se->add_option("--j", o.j)->required();
  se->add_option("--a", o.a)->required();
  se->add_option("--ring", o.ring)->required();

  auto* gen = app.add_subcommand("gen", "Generator C(v) or R(v) for a form");
  gen->add_option("--kind", o.kind)->required();
  gen->add_option("--form", o.form, "matrix JSON path or psi:n")->required();
  gen->add_option("--v", o.v, "comma-separated entries")->required();
  gen->add_option("--ring", o.ring, "ring for psi:n forms");

  auto* red = app.add_subcommand("reduce", "Elementary certificate eps0 with (1+eps0)^t psi (1+eps0) = phi");
  red->add_option("file", o.file, "matrix JSON")->required();

  auto* ver = app.add_subcommand("verify", "Run a property suite");
  ver->add_option("--suite", o.suite)->required();
  ver->add_option("--ring", o.ring);
  ver->add_option("--n", o.n);
  ver->add_option("--trials", o.trials);
  ver->add_option("--seed", o.seed);
  ver->add_option("--ideal", o.ideal);
  ver->add_option("--min-len", o.min_len);
  ver->add_option("--max-len", o.max_len);

  auto* fr = app.add_subcommand("factor-relative", "Rewrite a word as a product of conjugated ideal cores");
  fr->add_option("file", o.file, "word JSON")->required();
  fr->add_option("--ideal", o.ideal)->required();

  auto* wit = app.add_subcommand("witness", "Normality witness for gamma delta gamma^-1");
  wit->add_option("--form", o.form, "matrix JSON path or psi:n")->required();
  wit->add_option("--ring", o.ring, "ring for psi:n forms");
  wit->add_option("--gamma", o.gamma, "matrix or word JSON")->required();
  wit->add_option("--delta", o.delta, "word or relative word JSON")->required();
  wit->add_option("--ideal", o.ideal);

  auto* rf = app.add_subcommand("randform", "Random skew form of Pfaffian 1");
  rf->add_option("--ring", o.ring)->required();
  rf->add_option("--n", o.n);
  rf->add_option("--steps", o.steps);
  rf->add_option("--seed", o.seed);

  auto* st = app.add_subcommand("selftest", "Every suite on the default rings");
  st->add_option("--trials", o.trials)->default_val(3);
  st->add_option("--seed", o.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit(Json{{"error", "UsageError"}, {"message", e.what()}});
    return 2;
  }

  try {
    if (pf->parsed()) return cmd_pfaffian(o);
    if (se->parsed()) return cmd_se(o);
    if (gen->parsed()) return cmd_gen(o);
    if (red->parsed()) return cmd_reduce(o);
    if (ver->parsed()) return cmd_verify(o);
    if (fr->parsed()) return cmd_factor_relative(o);
    if (wit->parsed()) return cmd_witness(o);
    if (rf->parsed()) return cmd_randform(o);
    if (st->parsed()) return cmd_selftest(o);
  } catch (const esp::Error& e) {
    emit(esp::error_to_json(e));
    return exit_code_for(e.code());
  }
  return 2;
}
