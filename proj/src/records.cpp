#include "gf2perfect/records.hpp"

#include <sstream>
#include <stdexcept>

#include "gf2perfect/lemmas.hpp"
#include "gf2perfect/text.hpp"

namespace gf2p {

using nlohmann::ordered_json;

ordered_json factorization_json(const Factorization& f) {
  ordered_json out = ordered_json::array();
  for (const auto& pp : f.factors()) {
    out.push_back({{"prime_hex", to_hex(pp.prime)}, {"prime_text", to_text(pp.prime)}, {"exp", pp.exponent}});
  }
  return out;
}

ordered_json certificate_json(const PerfectCertificate& c) {
  ordered_json out;
  if (!c.label.empty()) out["label"] = c.label;
  out["poly_hex"] = to_hex(c.poly);
  out["poly_text"] = to_text(c.poly);
  out["degree"] = c.poly.degree();
  out["factors"] = factorization_json(c.factorization);
  out["omega"] = c.omega;
  out["parity"] = to_string(c.parity);
  out["sigma_hex"] = to_hex(c.sigma);
  out["sigma_factors"] = factorization_json(c.sigma_factorization);
  out["perfect"] = c.is_perfect;
  return out;
}

ordered_json report_json(const SearchReport& r) {
  ordered_json out;
  out["search"] = r.search;
  ordered_json bounds = ordered_json::object();
  for (const auto& [name, value] : r.bounds) bounds[name] = value;
  out["bounds"] = bounds;
  out["candidates_examined"] = r.candidates_examined;
  ordered_json pruned = ordered_json::object();
  for (const auto& [name, value] : r.shapes_pruned) pruned[name] = value;
  out["shapes_pruned"] = pruned;
  out["perfect_count"] = r.perfects_found.size();
  ordered_json perfects = ordered_json::array();
  for (const auto& f : r.perfects_found) {
    ordered_json c = certificate_json(f.certificate);
    c["translate_hex"] = to_hex(f.translate);
    c["translate_found"] = f.translate_found;
    if (f.shape) {
      c["shape"] = {{"case", to_string(f.shape->tag)},
                    {"h", f.shape->h},
                    {"k", f.shape->k},
                    {"l", f.shape->l},
                    {"m", f.shape->m},
                    {"p_hex", to_hex(f.p)},
                    {"q_hex", to_hex(f.q)}};
    }
    perfects.push_back(std::move(c));
  }
  out["perfects"] = std::move(perfects);
  return out;
}

ordered_json sigma_json(const SigmaValue& v) {
  ordered_json out;
  out["poly_hex"] = to_hex(v.input);
  out["poly_text"] = to_text(v.input);
  out["factors"] = factorization_json(v.input_factorization);
  out["sigma_hex"] = to_hex(v.sigma);
  out["sigma_text"] = to_text(v.sigma);
  if (v.sigma_factorization) out["sigma_factors"] = factorization_json(*v.sigma_factorization);
  return out;
}

std::string certificate_record(const PerfectCertificate& c) {
  return to_hex(c.poly) + ' ' + to_text(c.poly) + ' ' + c.factorization.to_string() +
         (c.is_perfect ? " perfect:true" : " perfect:false");
}

std::string report_records(const SearchReport& r) {
  std::string out;
  for (const auto& f : r.perfects_found) out += certificate_record(f.certificate) + '\n';
  return out;
}

std::string report_summary(const SearchReport& r) {
  std::ostringstream os;
  os << r.search;
  for (const auto& [name, value] : r.bounds) os << ' ' << name << '=' << value;
  os << " examined=" << r.candidates_examined;
  for (const auto& [name, value] : r.shapes_pruned) os << " pruned." << name << '=' << value;
  os << " found=" << r.perfects_found.size() << " [";
  for (std::size_t i = 0; i < r.perfects_found.size(); ++i) {
    if (i != 0) os << ',';
    os << to_hex(r.perfects_found[i].certificate.poly);
  }
  os << ']';
  return os.str();
}

std::optional<LemmaId> parse_lemma_id(std::string_view name) {
  if (name == "1iii") return LemmaId::Lemma1iii;
  if (name == "1iv") return LemmaId::Lemma1iv;
  if (name == "4") return LemmaId::Lemma4;
  if (name == "5") return LemmaId::Lemma5;
  if (name == "6") return LemmaId::Lemma6;
  if (name == "8") return LemmaId::Theorem8;
  if (name == "parity") return LemmaId::MinimalPrimeParity;
  return std::nullopt;
}

const char* to_string(LemmaId id) noexcept {
  switch (id) {
    case LemmaId::Lemma1iii: return "1iii";
    case LemmaId::Lemma1iv: return "1iv";
    case LemmaId::Lemma4: return "4";
    case LemmaId::Lemma5: return "5";
    case LemmaId::Lemma6: return "6";
    case LemmaId::Theorem8: return "8";
    case LemmaId::MinimalPrimeParity: return "parity";
  }
  return "?";
}

namespace {

ordered_json poly_json(const Poly& p) { return {{"hex", to_hex(p)}, {"text", to_text(p)}}; }

ordered_json poly_list_json(const std::vector<Poly>& ps) {
  ordered_json out = ordered_json::array();
  for (const auto& p : ps) out.push_back(poly_json(p));
  return out;
}

}  // namespace

LemmaVerdict verify_lemma(LemmaId id, const LemmaBounds& b) {
  LemmaVerdict v;
  v.id = id;
  ordered_json& rec = v.record;
  rec["lemma"] = to_string(id);
  switch (id) {
    case LemmaId::Lemma1iv: {
      const int max_deg = b.max_deg.value_or(16);
      rec["bounds"] = {{"max_deg", max_deg}};
      const auto found = lemmas::verify_lemma1_iv(max_deg);
      std::vector<Poly> expected{Poly(0b111)};
      if (max_deg >= 4) expected.emplace_back(0b11111);
      rec["found"] = poly_list_json(found);
      rec["expected"] = poly_list_json(expected);
      v.holds = found == expected;
      break;
    }
    case LemmaId::Lemma1iii: {
      const int m_bound = b.m_bound.value_or(40);
      rec["bounds"] = {{"m_bound", m_bound}};
      ordered_json viol = ordered_json::array();
      for (const auto& x : lemmas::verify_lemma1_iii(m_bound)) {
        viol.push_back({{"m", x.m}, {"p_hex", to_hex(x.p)}, {"q_hex", to_hex(x.q)}});
      }
      v.holds = viol.empty();
      rec["violations"] = std::move(viol);
      break;
    }
    case LemmaId::Lemma4: {
      const int h_bound = b.h_bound.value_or(20);
      const int k_bound = b.k_bound.value_or(10);
      rec["bounds"] = {{"h_bound", h_bound}, {"k_bound", k_bound}};
      const auto found = lemmas::verify_lemma4(h_bound, k_bound);
      ordered_json f = ordered_json::array();
      for (const auto& s : found) {
        f.push_back({{"h", s.h}, {"k", s.k}, {"p", poly_json(s.p)}, {"q", poly_json(s.q)}});
      }
      ordered_json e = ordered_json::array();
      const bool expect_solution = h_bound >= 4 && k_bound >= 1;
      if (expect_solution) {
        e.push_back({{"h", 4}, {"k", 1}, {"p", poly_json(Poly(0b111))}, {"q", poly_json(Poly(0b1001001))}});
      }
      v.holds = f == e;
      rec["found"] = std::move(f);
      rec["expected"] = std::move(e);
      break;
    }
    case LemmaId::Lemma5: {
      const int p_deg = b.p_deg_bound.value_or(6);
      const int n_bound = b.n_bound.value_or(4);
      rec["bounds"] = {{"p_deg_bound", p_deg}, {"n_bound", n_bound}};
      ordered_json viol = ordered_json::array();
      for (const auto& x : lemmas::verify_lemma5(p_deg, n_bound)) {
        viol.push_back({{"p_hex", to_hex(x.p)}, {"n", x.n}, {"power", x.power},
                        {"sigma_factors", x.sigma_factorization.to_string()}});
      }
      v.holds = viol.empty();
      rec["violations"] = std::move(viol);
      break;
    }
    case LemmaId::Lemma6: {
      const int p_deg = b.p_deg_bound.value_or(6);
      const int n_bound = b.n_bound.value_or(4);
      rec["bounds"] = {{"p_deg_bound", p_deg}, {"n_bound", n_bound}};
      ordered_json viol = ordered_json::array();
      for (const auto& x : lemmas::verify_lemma6(p_deg, n_bound)) {
        viol.push_back({{"p_hex", to_hex(x.p)}, {"n", x.n}, {"q_hex", to_hex(x.q)}, {"m", x.m}});
      }
      v.holds = viol.empty();
      rec["violations"] = std::move(viol);
      break;
    }
    case LemmaId::Theorem8: {
      const int h_bound = b.h_bound.value_or(30);
      rec["bounds"] = {{"h_bound", h_bound}};
      const auto found = lemmas::verify_theorem8(h_bound);
      const std::vector<unsigned> expected{1, 2, 3};
      rec["found"] = found;
      rec["expected"] = expected;
      v.holds = found == expected;
      break;
    }
    case LemmaId::MinimalPrimeParity: {
      ordered_json checked = ordered_json::array();
      bool all = true;
      auto check = [&](const PerfectCertificate& c) {
        const bool ok = lemmas::has_even_minimal_prime_count(c.factorization);
        all = all && ok;
        checked.push_back({{"poly_hex", to_hex(c.poly)}, {"even_minimal_primes", ok}});
      };
      if (b.poly) {
        const PerfectCertificate c = certify_perfect(*b.poly);
        if (!c.is_perfect) throw std::invalid_argument(to_text(*b.poly) + " is not perfect");
        rec["bounds"] = {{"poly_hex", to_hex(*b.poly)}};
        check(c);
      } else {
        rec["bounds"] = {{"source", "catalog"}};
        for (const auto& c : catalog()) check(c);
      }
      v.holds = all;
      rec["checked"] = std::move(checked);
      break;
    }
  }
  rec["holds"] = v.holds;
  return v;
}

}  // namespace gf2p
