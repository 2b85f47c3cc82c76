// Copyright 2026 The specspace Authors.
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

// Command-line front end: construct, check, good-vectors, probe, verify, search.
// Exit status: 0 success / holds, 1 refutation or violation, 2 usage or input error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "specspace/families.hpp"
#include "specspace/probe.hpp"
#include "specspace/search.hpp"
#include "specspace/span.hpp"
#include "specspace/verify.hpp"

namespace {

using namespace specspace;

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kUsage = 2;

constexpr const char* kQueryHelp = R"(Query literals:
  kspec:K          at most K distinct eigenvalues in the base field
  kspec-closure:K  at most K distinct eigenvalues in the algebraic closure
  kstar:K          as kspec, ignoring the eigenvalue 0
  kstar-closure:K  as kspec-closure, ignoring the eigenvalue 0
  short forms: 2spec, 2spec-closure, 1star, 1star-closure)";

struct Globals {
  unsigned threads = 0;
  std::uint64_t rng = 0;
  bool deterministic = false;

  ExecConfig config() const {
    ExecConfig c = ExecConfig::from_environment();
    c.threads = deterministic ? 1 : threads;
    return c;
  }
};

std::string format_vector(const Field& f, std::span<const Fe> x) {
  std::size_t nonzero = 0, at = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != Fe{}) {
      ++nonzero;
      at = i;
    }
  if (nonzero == 1 && x[at] == f.one()) return "[e_" + std::to_string(at + 1) + "]";
  std::string out = "[";
  for (std::size_t i = 0; i < x.size(); ++i) out += (i ? " " : "") + f.format(x[i]);
  return out + "]";
}

void print_matrix(const Mat& m, const std::string& indent) {
  std::istringstream lines(m.to_text());
  for (std::string line; std::getline(lines, line);) std::cout << indent << line << "\n";
}

void print_profile(const std::string& name, const InvariantProfile& p) {
  std::cout << name << ": dim=" << p.dim << " mult_closed=" << (p.mult_closed ? "yes" : "no")
            << " rank1_trace1=" << (p.rank1_trace1 ? "yes" : "no") << " good=" << p.good_count;
  if (p.nilpotent_span_dim) std::cout << " nilpotent_span=" << *p.nilpotent_span_dim;
  std::cout << "\n  image_profile:";
  std::size_t i = 0;
  while (i < p.image_profile.size()) {
    std::size_t j = i;
    while (j < p.image_profile.size() && p.image_profile[j] == p.image_profile[i]) ++j;
    std::cout << " " << p.image_profile[i] << "x" << (j - i);
    i = j;
  }
  std::cout << "\n";
}

std::uint64_t parse_budget(const std::string& text) {
  std::size_t used = 0;
  const double v = std::stod(text, &used);
  if (used != text.size() || !(v >= 0) || v > 1e18 || v != std::floor(v)) {
    throw Error(ErrorCode::BadParameters, "budget must be a non-negative integer, got '" + text + "'");
  }
  return static_cast<std::uint64_t>(v);
}

int cmd_construct(const std::string& descriptor, const std::string& field_text, const std::string& out) {
  const FamilyDescriptor d = FamilyDescriptor::parse(descriptor);
  const Field f = Field::parse(field_text);
  const MatSpace v = build(d, f);
  if (out.empty()) {
    std::cout << format_space(v);
  } else {
    write_space_file(out, v);
  }
  std::cout << "family " << d.to_string() << " (" << to_string(d.tag) << ") over " << f.literal() << ": n=" << v.n()
            << " dim=" << v.dim() << "\n";
  return kOk;
}

int cmd_check(const std::string& path, const std::string& query_text, const std::string& mode, std::uint64_t samples,
              const Globals& g) {
  const MatSpace v = read_space_file(path);
  const SpectrumQuery q = SpectrumQuery::parse(query_text);
  CheckMode m = CheckMode::exhaustive();
  if (mode == "sampled") {
    m = CheckMode::sampled(samples, g.rng);
  } else if (mode == "auto") {
    m = CheckMode::automatic(0, samples, g.rng);
  }
  const CheckResult r = check_spec(v, q, m, g.config());
  const bool full = r.coverage == Coverage::Full;
  if (r.holds) {
    std::cout << "holds (" << r.members_covered << "/" << r.members_total << " members"
              << (full ? "" : ", sampled") << ")\n";
    return kOk;
  }
  std::cout << "violated: member with " << count_eigs(*r.witness, q).count << " counted eigenvalues\n";
  print_matrix(*r.witness, "  ");
  std::cout << "  charpoly " << r.witness->charpoly().to_string() << "\n";
  return kViolated;
}

int cmd_good_vectors(const std::string& path, const Globals& g) {
  const MatSpace v = read_space_file(path);
  const auto survey = good_vector_survey(v, g.config());
  std::vector<const GoodVectorReport*> bad;
  for (const auto& r : survey)
    if (!r.is_good) bad.push_back(&r);
  std::cout << "points: " << survey.size() << " good: " << survey.size() - bad.size() << " bad: " << bad.size() << "\n";
  if (!bad.empty()) {
    std::cout << "bad points:";
    for (const auto* r : bad) std::cout << " " << format_vector(v.field(), r->vector);
    std::cout << "\n";
  }
  return kOk;
}

int cmd_probe(const std::string& a, const std::string& b, const Globals& g) {
  const MatSpace v = read_space_file(a);
  const MatSpace w = read_space_file(b);
  const SimilarityDecision d = decide_similarity(v, w, g.config());
  print_profile(a, d.left);
  print_profile(b, d.right);
  std::cout << to_string(d.verdict);
  if (!d.reason.empty()) std::cout << "(" << d.reason << ")";
  std::cout << "\n";
  if (d.witness) {
    std::cout << "conjugator P with P V P^-1 = W:\n";
    print_matrix(*d.witness, "  ");
  }
  return kOk;
}

struct VerifyArgs {
  std::vector<std::string> tags;
  std::vector<std::string> claims;
  std::string json;
  std::optional<std::uint64_t> q;
  std::optional<std::size_t> n;
  bool list = false;
};

int cmd_verify(const VerifyArgs& a, const Globals& g) {
  if (a.list) {
    for (const auto& c : claim_registry()) {
      std::cout << c.id << " [";
      for (std::size_t i = 0; i < c.tags.size(); ++i) std::cout << (i ? "," : "") << c.tags[i];
      std::cout << "] " << c.anchor << "\n";
    }
    return kOk;
  }
  ClaimParams p;
  p.q = a.q;
  p.n = a.n;
  p.seed = g.rng;
  p.config = g.config();
  const Report rep = run_all(a.tags, p, a.claims);
  for (const auto& r : rep.results) {
    std::cout << to_string(r.status) << "  " << r.claim_id;
    if (!g.deterministic) std::cout << "  (" << r.runtime_ms << " ms)";
    std::cout << "\n";
    if (!r.reason.empty()) std::cout << "    reason: " << r.reason << "\n";
    if (!r.detail.empty()) std::cout << "    " << r.detail << "\n";
  }
  std::cout << "verified " << rep.verified << ", refuted " << rep.refuted << ", skipped " << rep.skipped << "\n";
  if (!a.json.empty()) {
    std::ofstream out(a.json);
    if (!out) throw Error(ErrorCode::BadParameters, "cannot write " + a.json);
    out << to_json(rep, !g.deterministic);
  }
  return rep.ok() ? kOk : kViolated;
}

struct SearchArgs {
  std::string field = "GF(4)";
  std::size_t n = 3;
  std::string query = "1star";
  std::string budget = "1e4";
  std::string seed_space;
  std::string out;
  std::string json;
};

int cmd_search(const SearchArgs& a, const Globals& g) {
  const Field f = Field::parse(a.field);
  const SpectrumQuery q = SpectrumQuery::parse(a.query);
  if (f.order() == 2 && q.location == Location::BaseField) {
    throw Error(ErrorCode::BadParameters, "over GF(2) only closure-variant queries are searched");
  }
  const MatSpace seed = a.seed_space.empty() ? build(FamilyDescriptor::nt(a.n), f) : read_space_file(a.seed_space);
  if (!(seed.field() == f) || seed.n() != a.n) {
    throw Error(ErrorCode::DimensionMismatch, "seed space does not match --field/--n");
  }
  GrowOptions opt;
  opt.budget = parse_budget(a.budget);
  opt.rng_seed = g.rng;
  opt.config = g.config();
  const GrowResult r = grow(seed, q, opt);
  if (!a.out.empty()) write_space_file(a.out, r.best);
  nlohmann::ordered_json s;
  s["best_dim"] = r.best.dim();
  const auto bound = known_dimension_bound(a.n, f, q);
  s["conjecture_bound"] = bound ? nlohmann::ordered_json(*bound) : nlohmann::ordered_json(nullptr);
  s["iterations"] = r.iterations;
  s["accepted"] = r.accepted;
  s["restarts"] = r.restarts;
  s["truncated"] = r.truncated;
  const std::string text = s.dump(2) + "\n";
  std::cout << text;
  if (!a.json.empty()) {
    std::ofstream out(a.json);
    if (!out) throw Error(ErrorCode::BadParameters, "cannot write " + a.json);
    out << text;
  }
  if (a.out.empty()) std::cout << format_space(r.best);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact finite-field toolkit for bounded-spectrum matrix spaces"};
  app.require_subcommand(1);
  app.footer(kQueryHelp);
  Globals g;
  app.add_option("--threads", g.threads, "Worker threads (0 = available parallelism)")->capture_default_str();
  app.add_option("--rng", g.rng, "Seed for randomized commands")->capture_default_str();
  app.add_flag("--deterministic", g.deterministic, "Single thread and timing-free reports");

  std::string descriptor, field = "GF(3)", out;
  auto* construct = app.add_subcommand("construct", "Build a named family and write its space file");
  construct->add_option("descriptor", descriptor, "e.g. v1star:n=5,I=1,3  w2:n=6,p=1,F=fdelta:d=2  g4p  lr:n=5,k=3")
      ->required();
  construct->add_option("--field", field, "GF(p), GF(q) or GF(p^k; m0,...,mk)")->capture_default_str();
  construct->add_option("--out", out, "Space file to write (stdout when omitted)");

  std::string space_path, query = "2spec-closure", mode = "exhaustive";
  std::uint64_t samples = 1'000'000;
  auto* check = app.add_subcommand("check", "Decide a spectral class for a space file");
  check->add_option("space", space_path)->required()->check(CLI::ExistingFile);
  check->add_option("--query", query, "See the query table below")->capture_default_str();
  check->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "sampled", "auto"}))->capture_default_str();
  check->add_option("--samples", samples, "Draws for sampled/auto modes")->capture_default_str();
  check->footer(kQueryHelp);

  std::string goodvec_path;
  auto* goodvec = app.add_subcommand("good-vectors", "Survey good and bad projective points");
  goodvec->add_option("space", goodvec_path)->required()->check(CLI::ExistingFile);

  std::string probe_a, probe_b;
  auto* probe = app.add_subcommand("probe", "Compare invariants and decide similarity");
  probe->add_option("a", probe_a)->required()->check(CLI::ExistingFile);
  probe->add_option("b", probe_b)->required()->check(CLI::ExistingFile);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run the claim registry");
  verify->add_option("--tag", va.tags, "Select claims by tag (repeatable)");
  verify->add_option("--claim", va.claims, "Select claims by id (repeatable)");
  verify->add_option("--json", va.json, "Write the JSON report here");
  verify->add_option("--q", va.q, "Override the field order");
  verify->add_option("--n", va.n, "Override the matrix size");
  verify->add_flag("--list", va.list, "List the registry and exit");

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Randomized greedy growth of a spectral-class space");
  search->add_option("--field", sa.field)->capture_default_str();
  search->add_option("--n", sa.n)->capture_default_str();
  search->add_option("--query", sa.query)->capture_default_str();
  search->add_option("--budget", sa.budget, "Candidate draws, e.g. 1e6")->capture_default_str();
  search->add_option("--seed-space", sa.seed_space, "Starting space (default NT_n)")->check(CLI::ExistingFile);
  search->add_option("--out", sa.out, "Space file for the best space found");
  search->add_option("--json", sa.json, "Write the JSON summary here");
  search->footer(kQueryHelp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*construct) return cmd_construct(descriptor, field, out);
    if (*check) return cmd_check(space_path, query, mode, samples, g);
    if (*goodvec) return cmd_good_vectors(goodvec_path, g);
    if (*probe) return cmd_probe(probe_a, probe_b, g);
    if (*verify) return cmd_verify(va, g);
    if (*search) return cmd_search(sa, g);
  } catch (const ParseError& e) {
    std::cerr << "error: parse error at line " << e.line() << ", column " << e.column() << ": " << e.message() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
