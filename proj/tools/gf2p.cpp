// gf2p: command-line front end over the gf2perfect C interface.
//
// Exit status: 0 success, 1 a lemma verifier found a violation, 2 usage
// error (bad flags, unparsable polynomial, out-of-range bound), 3 other failure.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gf2perfect/gf2perfect.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFailure = 3;

struct ContextDeleter {
  void operator()(gf2p_context* c) const { gf2p_context_destroy(c); }
};
struct PolyDeleter {
  void operator()(gf2p_poly* p) const { gf2p_poly_destroy(p); }
};
struct ReportDeleter {
  void operator()(gf2p_report* r) const { gf2p_report_destroy(r); }
};
struct StringDeleter {
  void operator()(char* s) const { gf2p_string_free(s); }
};

using ContextPtr = std::unique_ptr<gf2p_context, ContextDeleter>;
using PolyPtr = std::unique_ptr<gf2p_poly, PolyDeleter>;
using ReportPtr = std::unique_ptr<gf2p_report, ReportDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

/// Thrown after a failed library call; carries the exit code.
struct CommandFailed {
  int exit_code;
};

class Session {
 public:
  Session() {
    gf2p_context* raw = nullptr;
    if (gf2p_context_create(&raw) != GF2P_OK) throw CommandFailed{kExitFailure};
    ctx_.reset(raw);
  }

  gf2p_context* ctx() const { return ctx_.get(); }

  void check(gf2p_status status, const std::string& what) const {
    if (status == GF2P_OK) return;
    std::cerr << "gf2p: " << what << ": " << gf2p_context_last_error(ctx_.get()) << '\n';
    switch (status) {
      case GF2P_ERR_PARSE:
      case GF2P_ERR_INVALID_ARGUMENT:
      case GF2P_ERR_DOMAIN:
      case GF2P_ERR_RANGE:
        throw CommandFailed{kExitUsage};
      default:
        throw CommandFailed{kExitFailure};
    }
  }

  PolyPtr parse(const std::string& text) const {
    gf2p_poly* raw = nullptr;
    check(gf2p_poly_parse(ctx(), text.c_str(), &raw), "cannot parse \"" + text + "\"");
    return PolyPtr(raw);
  }

 private:
  ContextPtr ctx_;
};

void emit(char* raw) {
  StringPtr s(raw);
  std::fputs(s.get(), stdout);
}

void emit_report(const Session& s, gf2p_report* raw, gf2p_format format) {
  ReportPtr report(raw);
  char* out = nullptr;
  s.check(gf2p_report_summary(s.ctx(), report.get(), &out), "summary");
  emit(out);
  s.check(gf2p_report_render(s.ctx(), report.get(), format, &out), "render");
  emit(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sum-of-divisors arithmetic and perfect polynomials over GF(2)"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  bool seed_given = false;
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("-j,--jobs", jobs, "Worker threads for searches")->envname("GF2P_JOBS")->check(CLI::Range(1U, 1024U));
  app.add_option_function<std::uint64_t>(
      "--seed", [&](const std::uint64_t& v) { seed = v; seed_given = true; },
      "Seed for randomized factor splitting");

  std::string poly_text;
  auto* factor_cmd = app.add_subcommand("factor", "Factor a polynomial into primes");
  factor_cmd->add_option("poly", poly_text, "Polynomial, e.g. \"x^4+x+1\" or 0x13")->required();
  auto* sigma_cmd = app.add_subcommand("sigma", "Sum of divisors");
  sigma_cmd->add_option("poly", poly_text)->required();
  auto* certify_cmd = app.add_subcommand("certify", "Check sigma(A) = A");
  certify_cmd->add_option("poly", poly_text)->required();
  auto* catalog_cmd = app.add_subcommand("catalog", "Certify the catalog of known perfect polynomials");

  int max_deg = 0;
  auto* search_cmd = app.add_subcommand("search", "Exhaustive search by degree");
  search_cmd->add_option("--max-deg", max_deg)->required();

  int deg_bound = 0;
  int p_deg_bound = 0;
  bool no_prune = false;
  auto* shape_cmd = app.add_subcommand("shape-search", "Search x^h(x+1)^k P^l Q^m shapes");
  shape_cmd->add_option("--deg-bound", deg_bound)->required();
  shape_cmd->add_option("--p-deg-bound", p_deg_bound)->required();
  shape_cmd->add_flag("--no-prune", no_prune, "Examine every exponent pattern");

  int odd_max_deg = 0;
  auto* odd_cmd = app.add_subcommand("odd-square-search", "Odd B with sigma(B^2) = B^2");
  odd_cmd->add_option("--max-deg", odd_max_deg)->required();

  std::string lemma_name;
  gf2p_lemma_bounds lemma_bounds;
  gf2p_lemma_bounds_init(&lemma_bounds);
  std::optional<std::string> lemma_poly;
  auto* lemma_cmd = app.add_subcommand("verify-lemma", "Bounded check of a structural lemma");
  lemma_cmd->add_option("lemma", lemma_name, "1iv | 1iii | 4 | 5 | 6 | 8 | parity")
      ->required()
      ->check(CLI::IsMember({"1iv", "1iii", "4", "5", "6", "8", "parity"}));
  lemma_cmd->add_option("--max-deg", lemma_bounds.max_deg, "Degree bound (1iv)")->check(CLI::NonNegativeNumber);
  lemma_cmd->add_option("--m-bound", lemma_bounds.m_bound, "Largest m in sigma(x^m) (1iii)")->check(CLI::NonNegativeNumber);
  lemma_cmd->add_option("--h-bound", lemma_bounds.h_bound, "Bound on h (4, 8)")->check(CLI::NonNegativeNumber);
  lemma_cmd->add_option("--k-bound", lemma_bounds.k_bound, "Bound on k (4)")->check(CLI::NonNegativeNumber);
  lemma_cmd->add_option("--p-deg-bound", lemma_bounds.p_deg_bound, "Prime degree bound (5, 6)")->check(CLI::NonNegativeNumber);
  lemma_cmd->add_option("--n-bound", lemma_bounds.n_bound, "Bound on n in sigma(P^2n) (5, 6)")->check(CLI::NonNegativeNumber);
  lemma_cmd->add_option("--poly", lemma_poly, "Perfect polynomial for the parity check");

  int irr_max_deg = 0;
  std::optional<std::string> cache_path;
  auto* irr_cmd = app.add_subcommand("irreducibles", "List irreducibles as hex masks");
  irr_cmd->add_option("--max-deg", irr_max_deg)->required();
  irr_cmd->add_option("--cache", cache_path, "Read or write the list at this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const gf2p_format format = format_name == "json" ? GF2P_FORMAT_JSON : GF2P_FORMAT_TEXT;

  try {
    Session s;
    s.check(gf2p_context_set_jobs(s.ctx(), jobs), "jobs");
    if (seed_given) s.check(gf2p_context_set_seed(s.ctx(), seed), "seed");
    char* out = nullptr;
    gf2p_report* report = nullptr;

    if (factor_cmd->parsed()) {
      auto p = s.parse(poly_text);
      s.check(gf2p_factor(s.ctx(), p.get(), format, &out), "factor");
      emit(out);
    } else if (sigma_cmd->parsed()) {
      auto p = s.parse(poly_text);
      s.check(gf2p_sigma_describe(s.ctx(), p.get(), format, &out), "sigma");
      emit(out);
    } else if (certify_cmd->parsed()) {
      auto p = s.parse(poly_text);
      s.check(gf2p_certify(s.ctx(), p.get(), nullptr, format, &out), "certify");
      emit(out);
    } else if (catalog_cmd->parsed()) {
      s.check(gf2p_catalog(s.ctx(), format, &out), "catalog");
      emit(out);
    } else if (search_cmd->parsed()) {
      s.check(gf2p_exhaustive_search(s.ctx(), max_deg, &report), "search");
      emit_report(s, report, format);
    } else if (shape_cmd->parsed()) {
      s.check(gf2p_shape_search(s.ctx(), deg_bound, p_deg_bound, no_prune ? 0 : 1, &report), "shape-search");
      emit_report(s, report, format);
    } else if (odd_cmd->parsed()) {
      s.check(gf2p_odd_square_search(s.ctx(), odd_max_deg, &report), "odd-square-search");
      emit_report(s, report, format);
    } else if (lemma_cmd->parsed()) {
      PolyPtr poly;
      if (lemma_poly) {
        poly = s.parse(*lemma_poly);
        lemma_bounds.poly = poly.get();
      }
      int holds = 0;
      s.check(gf2p_verify_lemma(s.ctx(), lemma_name.c_str(), &lemma_bounds, &holds, format, &out), "verify-lemma");
      emit(out);
      return holds != 0 ? kExitOk : kExitViolation;
    } else if (irr_cmd->parsed()) {
      s.check(gf2p_irreducibles(s.ctx(), irr_max_deg, cache_path ? cache_path->c_str() : nullptr, &out),
              "irreducibles");
      emit(out);
    }
  } catch (const CommandFailed& f) {
    return f.exit_code;
  }
  return kExitOk;
}
