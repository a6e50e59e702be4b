// Command-line front door: evaluate bound forms, compare competing bounds,
// run the claims auditor, and regenerate figure data. Output is scriptable
// and byte-deterministic for fixed arguments; every real is printed with 17
// significant digits.
//
// Exit codes: 0 success (and, for audits, all validity claims pass),
// 2 at least one validity audit failed, 3 usage or domain error.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sinebound/sinebound.hpp"

namespace {

using sinebound::detail::fmt17;

std::vector<double> parse_params(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty())
      throw std::invalid_argument("empty value in parameter list '" + csv +
                                  "'");
    std::size_t pos = 0;
    double v = std::stod(tok, &pos);
    if (pos != tok.size())
      throw std::invalid_argument("malformed number '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty parameter list");
  return out;
}

void print_sine_bound(const sinebound::SineBound& b) {
  std::cout << "{\"sigma\": " << fmt17(b.sigma) << ", \"lam\": "
            << fmt17(b.lam) << ", \"arg\": " << fmt17(b.arg)
            << ", \"value\": " << fmt17(b.value)
            << ", \"log_value\": " << fmt17(b.log_value) << "}\n";
}

int run_eval(const std::string& form_name, const std::string& params_csv,
             const std::string& weights_csv) {
  using namespace sinebound;
  BoundForm form;
  {
    bool found = false;
    for (BoundForm f :
         {BoundForm::CorMain, BoundForm::P2n, BoundForm::Q2n, BoundForm::Sn,
          BoundForm::Tn, BoundForm::C37a, BoundForm::C37b, BoundForm::A2,
          BoundForm::B2, BoundForm::S3, BoundForm::T3, BoundForm::S_yx,
          BoundForm::T_yx, BoundForm::S_zy, BoundForm::T_zy, BoundForm::S_zx,
          BoundForm::T_zx, BoundForm::KFam_A, BoundForm::KFam_B,
          BoundForm::Diag, BoundForm::OneD_a, BoundForm::OneD_b,
          BoundForm::OneD_c}) {
      if (to_string(f) == form_name) {
        form = f;
        found = true;
        break;
      }
    }
    if (!found)
      throw std::invalid_argument("unknown bound form '" + form_name + "'");
  }
  std::vector<double> params = parse_params(params_csv);

  if (form == BoundForm::CorMain) {
    if (weights_csv.empty())
      throw std::invalid_argument("CorMain needs --weights");
    WeightedAngles wa(params, parse_params(weights_csv));
    print_sine_bound(rhs_general(wa));
    return 0;
  }
  if (form == BoundForm::KFam_A || form == BoundForm::KFam_B) {
    if (params.size() != 2)
      throw std::invalid_argument("k-family forms take --params k,y");
    double kd = params[0];
    int k = static_cast<int>(kd);
    if (kd != static_cast<double>(k) || k < 1)
      throw std::invalid_argument("k must be a positive integer, got " +
                                  fmt17(kd));
    print_sine_bound(eval_bound(form, k, params[1]));
    return 0;
  }
  print_sine_bound(eval_bound(form, ParamVector(params)));
  return 0;
}

const char* relation_word(sinebound::Relation r) {
  switch (r) {
    case sinebound::Relation::FirstGE: return ">=";
    case sinebound::Relation::SecondGE: return "<=";
    case sinebound::Relation::Equal: return "==";
  }
  return "?";
}

int run_compare(const std::string& family, const std::string& params_csv) {
  using namespace sinebound;
  std::vector<double> params = parse_params(params_csv);
  if (family == "ST") {
    Verdict v = compare_st(ParamVector(params));
    const char* sharper = v.sharper == Sharper::First    ? "S"
                          : v.sharper == Sharper::Second ? "T"
                                                         : "either";
    std::cout << "S " << relation_word(v.relation) << " T"
              << "; delta=" << fmt17(v.st->delta_n)
              << "; factor=" << fmt17(v.st->two_lam_n_minus_1)
              << "; sigma=" << fmt17(v.cmp.sigma)
              << "; tau=" << fmt17(v.cmp.tau)
              << "; lam=" << fmt17(v.cmp.lam) << "; sharper=" << sharper
              << "\n";
    return 0;
  }
  if (family == "PQ") {
    Verdict v = compare_pq(ParamVector(params));
    const char* sharper = v.sharper == Sharper::First    ? "P"
                          : v.sharper == Sharper::Second ? "Q"
                                                         : "either";
    std::cout << "P " << relation_word(v.relation) << " Q"
              << "; Delta=" << fmt17(v.pq->delta_cap)
              << "; Sigma=" << fmt17(v.pq->sigma_cap)
              << "; sigma=" << fmt17(v.cmp.sigma)
              << "; tau=" << fmt17(v.cmp.tau)
              << "; lam=" << fmt17(v.cmp.lam) << "; sharper=" << sharper
              << "\n";
    return 0;
  }
  if (family == "lemma") {
    if (params.size() != 3)
      throw std::invalid_argument(
          "--family lemma takes --params sigma,tau,lam");
    Verdict v = sin_compare(params[0], params[1], params[2]);
    const char* sharper = v.sharper == Sharper::First    ? "first"
                          : v.sharper == Sharper::Second ? "second"
                                                         : "either";
    std::cout << "first " << relation_word(v.relation) << " second"
              << "; diff=" << fmt17(v.cmp.diff)
              << "; defect=" << fmt17(v.cmp.defect)
              << "; criterion=" << fmt17(v.cmp.criterion)
              << "; sharper=" << sharper << "\n";
    return 0;
  }
  throw std::invalid_argument("unknown family '" + family +
                              "' (expected ST, PQ or lemma)");
}

int run_audit(const std::string& claim_name, const sinebound::AuditConfig& cfg,
              const std::string& out_path) {
  using namespace sinebound;
  std::vector<AuditReport> reports;
  if (claim_name.empty()) {
    reports = audit_all(cfg);
  } else {
    auto claim = claim_from_string(claim_name);
    if (!claim)
      throw std::invalid_argument("unknown claim '" + claim_name + "'");
    ClaimTraits tr = claim_traits(*claim);
    if (tr.has_validity)
      reports.push_back(audit_validity(*claim, cfg));
    if (tr.has_optimality)
      reports.push_back(audit_optimality(*claim, cfg));
    if (tr.has_table) reports.push_back(audit_table(*claim, cfg));
  }

  std::ofstream os(out_path, std::ios::binary);
  if (!os)
    throw std::runtime_error("cannot open for writing: " + out_path);
  write_reports(os, reports);
  os.close();

  for (const auto& r : reports) {
    std::cout << to_string(r.claim) << " " << to_string(r.kind) << ": "
              << (r.status == AuditStatus::Pass         ? "PASS"
                  : r.status == AuditStatus::Fail       ? "FAIL"
                                                        : "INCONSISTENT")
              << " (samples=" << r.samples << ", gap=" << fmt17(r.gap)
              << ")\n";
  }
  return any_validity_failure(reports) ? 2 : 0;
}

int run_region(const std::string& figure_name, int resolution,
               const std::string& format_name, const std::string& out_path) {
  using namespace sinebound;
  auto fig = figure_from_string(figure_name);
  if (!fig)
    throw std::invalid_argument("unknown figure '" + figure_name + "'");
  auto format = emit_format_from_string(format_name);
  if (!format)
    throw std::invalid_argument("unknown format '" + format_name +
                                "' (expected csv, pgm or svg)");
  emit(render(*fig, resolution), *format, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted sine-product bound evaluator and claims auditor"};
  app.require_subcommand(1);

  std::string form, params, weights, family, claim, out_path, figure;
  std::string format_name = "csv";
  int resolution = 256;
  sinebound::AuditConfig cfg;

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a bound form");
  eval_cmd->add_option("--form", form, "bound form tag")->required();
  eval_cmd->add_option("--params", params, "comma-separated parameters")
      ->required();
  eval_cmd->add_option("--weights", weights,
                       "comma-separated weights (CorMain only)");

  auto* cmp_cmd = app.add_subcommand("compare", "compare competing bounds");
  cmp_cmd->add_option("--family", family, "ST, PQ or lemma")->required();
  cmp_cmd->add_option("--params", params, "comma-separated parameters")
      ->required();

  auto* audit_cmd = app.add_subcommand("audit", "run claim audits");
  audit_cmd->add_option("--claim", claim, "single claim id (default: all)");
  audit_cmd->add_option("--grid", cfg.grid_per_dim, "grid cells per axis");
  audit_cmd->add_option("--samples", cfg.random_samples,
                        "random samples per claim");
  audit_cmd->add_option("--seed", cfg.seed, "sampling seed");
  audit_cmd->add_option("--refine", cfg.refine_depth,
                        "local refinement rounds");
  audit_cmd->add_option("--out", out_path, "report output path")->required();

  auto* region_cmd = app.add_subcommand("region", "emit figure data");
  region_cmd->add_option("--figure", figure, "Fig1..Fig8")->required();
  region_cmd->add_option("--resolution", resolution, "cells per axis");
  region_cmd->add_option("--format", format_name, "csv, pgm or svg");
  region_cmd->add_option("--out", out_path, "output path")->required();

  auto* curves_cmd = app.add_subcommand("curves", "emit the curve comparison");
  curves_cmd->add_option("--resolution", resolution, "sample count");
  curves_cmd->add_option("--format", format_name, "csv or svg");
  curves_cmd->add_option("--out", out_path, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 3;
  }

  try {
    if (app.got_subcommand(eval_cmd)) return run_eval(form, params, weights);
    if (app.got_subcommand(cmp_cmd)) return run_compare(family, params);
    if (app.got_subcommand(audit_cmd)) return run_audit(claim, cfg, out_path);
    if (app.got_subcommand(region_cmd))
      return run_region(figure, resolution, format_name, out_path);
    if (app.got_subcommand(curves_cmd))
      return run_region("Fig8", resolution, format_name, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
