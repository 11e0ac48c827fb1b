#include "gf2perfect/gf2perfect.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <new>
#include <stdexcept>
#include <string>

#include "gf2perfect/factor.hpp"
#include "gf2perfect/perfect.hpp"
#include "gf2perfect/poly.hpp"
#include "gf2perfect/records.hpp"
#include "gf2perfect/sigma.hpp"
#include "gf2perfect/text.hpp"

struct gf2p_context {
  unsigned jobs = 1;
  std::uint64_t seed = gf2p::kDefaultFactorSeed;
  std::string last_error;
  long error_position = -1;
};

struct gf2p_poly {
  gf2p::Poly value;
};

struct gf2p_report {
  gf2p::SearchReport value;
};

namespace {

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string render(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

// Runs body, mapping exceptions onto status codes and recording the message.
template <class Body>
gf2p_status guarded(gf2p_context* ctx, Body&& body) {
  if (ctx == nullptr) return GF2P_ERR_INVALID_ARGUMENT;
  ctx->last_error.clear();
  ctx->error_position = -1;
  try {
    body();
    return GF2P_OK;
  } catch (const gf2p::ParseError& e) {
    ctx->last_error = e.what();
    ctx->error_position = static_cast<long>(e.position());
    return GF2P_ERR_PARSE;
  } catch (const std::domain_error& e) {
    ctx->last_error = e.what();
    return GF2P_ERR_DOMAIN;
  } catch (const std::out_of_range& e) {
    ctx->last_error = e.what();
    return GF2P_ERR_RANGE;
  } catch (const std::invalid_argument& e) {
    ctx->last_error = e.what();
    return GF2P_ERR_INVALID_ARGUMENT;
  } catch (const std::runtime_error& e) {
    ctx->last_error = e.what();
    return GF2P_ERR_IO;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return GF2P_ERR_INTERNAL;
  } catch (...) {
    ctx->last_error = "unknown error";
    return GF2P_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

gf2p_poly* wrap(gf2p::Poly p) { return new gf2p_poly{std::move(p)}; }

}  // namespace

extern "C" {

const char* gf2p_status_name(gf2p_status status) {
  switch (status) {
    case GF2P_OK: return "ok";
    case GF2P_ERR_INVALID_ARGUMENT: return "invalid argument";
    case GF2P_ERR_PARSE: return "parse error";
    case GF2P_ERR_DOMAIN: return "domain error";
    case GF2P_ERR_RANGE: return "out of range";
    case GF2P_ERR_IO: return "i/o error";
    case GF2P_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void gf2p_string_free(char* s) { std::free(s); }

gf2p_status gf2p_context_create(gf2p_context** out) {
  if (out == nullptr) return GF2P_ERR_INVALID_ARGUMENT;
  *out = new (std::nothrow) gf2p_context{};
  return *out != nullptr ? GF2P_OK : GF2P_ERR_INTERNAL;
}

void gf2p_context_destroy(gf2p_context* ctx) { delete ctx; }

gf2p_status gf2p_context_set_jobs(gf2p_context* ctx, unsigned jobs) {
  return guarded(ctx, [&] {
    require(jobs >= 1, "jobs must be >= 1");
    ctx->jobs = jobs;
  });
}

gf2p_status gf2p_context_set_seed(gf2p_context* ctx, uint64_t seed) {
  return guarded(ctx, [&] { ctx->seed = seed; });
}

const char* gf2p_context_last_error(const gf2p_context* ctx) {
  return ctx == nullptr ? "null context" : ctx->last_error.c_str();
}

long gf2p_context_error_position(const gf2p_context* ctx) { return ctx == nullptr ? -1 : ctx->error_position; }

gf2p_status gf2p_poly_parse(gf2p_context* ctx, const char* text, gf2p_poly** out) {
  return guarded(ctx, [&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = wrap(gf2p::parse_poly(text));
  });
}

gf2p_status gf2p_poly_from_words(gf2p_context* ctx, const uint64_t* words, size_t count, gf2p_poly** out) {
  return guarded(ctx, [&] {
    require(out != nullptr && (words != nullptr || count == 0), "null argument");
    *out = wrap(gf2p::Poly(std::vector<std::uint64_t>(words, words + count)));
  });
}

void gf2p_poly_destroy(gf2p_poly* p) { delete p; }

long gf2p_poly_degree(const gf2p_poly* p) {
  if (p == nullptr || p->value.is_zero()) return -1;
  return p->value.degree();
}

size_t gf2p_poly_words(const gf2p_poly* p, uint64_t* words, size_t capacity) {
  if (p == nullptr) return 0;
  const auto w = p->value.words();
  for (size_t i = 0; i < w.size() && i < capacity && words != nullptr; ++i) words[i] = w[i];
  return w.size();
}

int gf2p_poly_equal(const gf2p_poly* a, const gf2p_poly* b) {
  return a != nullptr && b != nullptr && a->value == b->value ? 1 : 0;
}

gf2p_status gf2p_poly_to_text(gf2p_context* ctx, const gf2p_poly* p, char** out) {
  return guarded(ctx, [&] {
    require(p != nullptr && out != nullptr, "null argument");
    *out = dup_string(gf2p::to_text(p->value));
  });
}

gf2p_status gf2p_poly_to_hex(gf2p_context* ctx, const gf2p_poly* p, char** out) {
  return guarded(ctx, [&] {
    require(p != nullptr && out != nullptr, "null argument");
    *out = dup_string(gf2p::to_hex(p->value));
  });
}

gf2p_status gf2p_poly_add(gf2p_context* ctx, const gf2p_poly* a, const gf2p_poly* b, gf2p_poly** out) {
  return guarded(ctx, [&] {
    require(a != nullptr && b != nullptr && out != nullptr, "null argument");
    *out = wrap(gf2p::add(a->value, b->value));
  });
}

gf2p_status gf2p_poly_mul(gf2p_context* ctx, const gf2p_poly* a, const gf2p_poly* b, gf2p_poly** out) {
  return guarded(ctx, [&] {
    require(a != nullptr && b != nullptr && out != nullptr, "null argument");
    *out = wrap(gf2p::mul(a->value, b->value));
  });
}

gf2p_status gf2p_poly_divrem(gf2p_context* ctx, const gf2p_poly* a, const gf2p_poly* d, gf2p_poly** quotient,
                             gf2p_poly** remainder) {
  return guarded(ctx, [&] {
    require(a != nullptr && d != nullptr && quotient != nullptr && remainder != nullptr, "null argument");
    auto [q, r] = gf2p::divrem(a->value, d->value);
    *quotient = wrap(std::move(q));
    *remainder = wrap(std::move(r));
  });
}

gf2p_status gf2p_poly_gcd(gf2p_context* ctx, const gf2p_poly* a, const gf2p_poly* b, gf2p_poly** out) {
  return guarded(ctx, [&] {
    require(a != nullptr && b != nullptr && out != nullptr, "null argument");
    *out = wrap(gf2p::gcd(a->value, b->value));
  });
}

gf2p_status gf2p_poly_pow(gf2p_context* ctx, const gf2p_poly* a, uint64_t e, gf2p_poly** out) {
  return guarded(ctx, [&] {
    require(a != nullptr && out != nullptr, "null argument");
    if (a->value.degree() > 0 && e > static_cast<uint64_t>(gf2p::kMaxParsedDegree / a->value.degree())) {
      throw std::out_of_range("power degree too large");
    }
    *out = wrap(gf2p::pow(a->value, e));
  });
}

gf2p_status gf2p_poly_translate(gf2p_context* ctx, const gf2p_poly* a, gf2p_poly** out) {
  return guarded(ctx, [&] {
    require(a != nullptr && out != nullptr, "null argument");
    *out = wrap(gf2p::translate(a->value));
  });
}

gf2p_status gf2p_poly_reverse(gf2p_context* ctx, const gf2p_poly* a, gf2p_poly** out) {
  return guarded(ctx, [&] {
    require(a != nullptr && out != nullptr, "null argument");
    *out = wrap(gf2p::reverse(a->value));
  });
}

gf2p_status gf2p_is_irreducible(gf2p_context* ctx, const gf2p_poly* p, int* out) {
  return guarded(ctx, [&] {
    require(p != nullptr && out != nullptr, "null argument");
    *out = gf2p::is_irreducible(p->value) ? 1 : 0;
  });
}

gf2p_status gf2p_factor(gf2p_context* ctx, const gf2p_poly* p, gf2p_format format, char** out) {
  return guarded(ctx, [&] {
    require(p != nullptr && out != nullptr, "null argument");
    const auto f = gf2p::factorize(p->value, ctx->seed);
    if (format == GF2P_FORMAT_JSON) {
      nlohmann::ordered_json j;
      j["poly_hex"] = gf2p::to_hex(p->value);
      j["poly_text"] = gf2p::to_text(p->value);
      j["omega"] = f.omega();
      j["factors"] = gf2p::factorization_json(f);
      *out = dup_string(render(j));
    } else {
      *out = dup_string(f.to_string() + "\n");
    }
  });
}

gf2p_status gf2p_sigma(gf2p_context* ctx, const gf2p_poly* p, gf2p_poly** out) {
  return guarded(ctx, [&] {
    require(p != nullptr && out != nullptr, "null argument");
    *out = wrap(gf2p::sigma(p->value, ctx->seed).sigma);
  });
}

gf2p_status gf2p_sigma_describe(gf2p_context* ctx, const gf2p_poly* p, gf2p_format format, char** out) {
  return guarded(ctx, [&] {
    require(p != nullptr && out != nullptr, "null argument");
    gf2p::SigmaValue v = gf2p::sigma(p->value, ctx->seed);
    if (format == GF2P_FORMAT_JSON) {
      gf2p::ensure_sigma_factorization(v, ctx->seed);
      *out = dup_string(render(gf2p::sigma_json(v)));
    } else {
      *out = dup_string(gf2p::to_text(v.sigma) + "\n");
    }
  });
}

gf2p_status gf2p_omega(gf2p_context* ctx, const gf2p_poly* p, size_t* out) {
  return guarded(ctx, [&] {
    require(p != nullptr && out != nullptr, "null argument");
    *out = gf2p::omega(p->value);
  });
}

gf2p_status gf2p_parity(gf2p_context* ctx, const gf2p_poly* p, int* is_even) {
  return guarded(ctx, [&] {
    require(p != nullptr && is_even != nullptr, "null argument");
    *is_even = gf2p::parity(p->value) == gf2p::Parity::Even ? 1 : 0;
  });
}

gf2p_status gf2p_irreducibles(gf2p_context* ctx, int max_deg, const char* cache_path, char** out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null argument");
    if (max_deg < 1) throw std::invalid_argument("irreducible degree bound must be >= 1");
    if (max_deg > gf2p::kMaxSieveDegree) {
      throw std::out_of_range("irreducible degree bound must be <= " + std::to_string(gf2p::kMaxSieveDegree));
    }
    std::vector<gf2p::Poly> primes;
    bool have = false;
    if (cache_path != nullptr && std::filesystem::exists(cache_path)) {
      primes = gf2p::load_irreducibles(cache_path);
      // A cache is usable when it reaches at least max_deg.
      have = !primes.empty() && primes.back().degree() >= max_deg;
      if (have) std::erase_if(primes, [&](const gf2p::Poly& p) { return p.degree() > max_deg; });
    }
    if (!have) {
      primes = gf2p::irreducibles_up_to(max_deg);
      if (cache_path != nullptr) gf2p::save_irreducibles(cache_path, primes);
    }
    std::string text;
    for (const auto& p : primes) text += gf2p::to_hex(p) + '\n';
    *out = dup_string(text);
  });
}

gf2p_status gf2p_certify(gf2p_context* ctx, const gf2p_poly* p, int* is_perfect, gf2p_format format, char** out) {
  return guarded(ctx, [&] {
    require(p != nullptr, "null argument");
    const auto c = gf2p::certify_perfect(p->value, ctx->seed);
    if (is_perfect != nullptr) *is_perfect = c.is_perfect ? 1 : 0;
    if (out != nullptr) {
      *out = dup_string(format == GF2P_FORMAT_JSON ? render(gf2p::certificate_json(c))
                                                   : gf2p::certificate_record(c) + "\n");
    }
  });
}

gf2p_status gf2p_catalog(gf2p_context* ctx, gf2p_format format, char** out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null argument");
    const auto entries = gf2p::catalog();
    if (format == GF2P_FORMAT_JSON) {
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      for (const auto& c : entries) j.push_back(gf2p::certificate_json(c));
      *out = dup_string(render(j));
    } else {
      std::string text;
      for (const auto& c : entries) text += c.label + ' ' + gf2p::certificate_record(c) + '\n';
      *out = dup_string(text);
    }
  });
}

gf2p_status gf2p_exhaustive_search(gf2p_context* ctx, int max_deg, gf2p_report** out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null argument");
    *out = new gf2p_report{gf2p::exhaustive_search(max_deg, {ctx->jobs, ctx->seed})};
  });
}

gf2p_status gf2p_shape_search(gf2p_context* ctx, int deg_bound, int p_deg_bound, int use_pruning,
                              gf2p_report** out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null argument");
    *out = new gf2p_report{
        gf2p::shape_search({deg_bound, p_deg_bound, use_pruning != 0}, {ctx->jobs, ctx->seed})};
  });
}

gf2p_status gf2p_odd_square_search(gf2p_context* ctx, int max_deg, gf2p_report** out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null argument");
    *out = new gf2p_report{gf2p::odd_square_search(max_deg, {ctx->jobs, ctx->seed})};
  });
}

void gf2p_report_destroy(gf2p_report* r) { delete r; }

size_t gf2p_report_perfect_count(const gf2p_report* r) { return r == nullptr ? 0 : r->value.perfects_found.size(); }

uint64_t gf2p_report_candidates_examined(const gf2p_report* r) {
  return r == nullptr ? 0 : r->value.candidates_examined;
}

double gf2p_report_wall_seconds(const gf2p_report* r) {
  return r == nullptr ? 0.0 : std::chrono::duration<double>(r->value.wall_time).count();
}

gf2p_status gf2p_report_perfect_hex(gf2p_context* ctx, const gf2p_report* r, size_t i, char** out) {
  return guarded(ctx, [&] {
    require(r != nullptr && out != nullptr, "null argument");
    if (i >= r->value.perfects_found.size()) throw std::out_of_range("perfect index out of range");
    *out = dup_string(gf2p::to_hex(r->value.perfects_found[i].certificate.poly));
  });
}

gf2p_status gf2p_report_summary(gf2p_context* ctx, const gf2p_report* r, char** out) {
  return guarded(ctx, [&] {
    require(r != nullptr && out != nullptr, "null argument");
    *out = dup_string(gf2p::report_summary(r->value) + "\n");
  });
}

gf2p_status gf2p_report_render(gf2p_context* ctx, const gf2p_report* r, gf2p_format format, char** out) {
  return guarded(ctx, [&] {
    require(r != nullptr && out != nullptr, "null argument");
    *out = dup_string(format == GF2P_FORMAT_JSON ? render(gf2p::report_json(r->value))
                                                 : gf2p::report_records(r->value));
  });
}

void gf2p_lemma_bounds_init(gf2p_lemma_bounds* b) {
  if (b == nullptr) return;
  b->max_deg = b->m_bound = b->h_bound = b->k_bound = b->p_deg_bound = b->n_bound = -1;
  b->poly = nullptr;
}

gf2p_status gf2p_verify_lemma(gf2p_context* ctx, const char* name, const gf2p_lemma_bounds* bounds, int* holds,
                              gf2p_format format, char** out) {
  return guarded(ctx, [&] {
    require(name != nullptr, "null lemma name");
    const auto id = gf2p::parse_lemma_id(name);
    if (!id) throw std::invalid_argument(std::string("unknown lemma '") + name + "'");
    gf2p::LemmaBounds b;
    if (bounds != nullptr) {
      auto opt = [](int v) { return v < 0 ? std::nullopt : std::optional<int>(v); };
      b.max_deg = opt(bounds->max_deg);
      b.m_bound = opt(bounds->m_bound);
      b.h_bound = opt(bounds->h_bound);
      b.k_bound = opt(bounds->k_bound);
      b.p_deg_bound = opt(bounds->p_deg_bound);
      b.n_bound = opt(bounds->n_bound);
      if (bounds->poly != nullptr) b.poly = bounds->poly->value;
    }
    const auto verdict = gf2p::verify_lemma(*id, b);
    if (holds != nullptr) *holds = verdict.holds ? 1 : 0;
    if (out != nullptr) {
      if (format == GF2P_FORMAT_JSON) {
        *out = dup_string(render(verdict.record));
      } else {
        std::string text = std::string("lemma ") + name + (verdict.holds ? " holds" : " VIOLATED");
        text += " bounds=" + verdict.record.at("bounds").dump();
        if (verdict.record.contains("found")) text += " found=" + verdict.record.at("found").dump();
        if (verdict.record.contains("violations")) text += " violations=" + verdict.record.at("violations").dump();
        *out = dup_string(text + "\n");
      }
    }
  });
}

}  // extern "C"
