#pragma once

// Machine-readable output: JSON documents (schema in docs/FORMATS.md), one-line
// records, deterministic summary lines, and lemma verdicts.

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "gf2perfect/factor.hpp"
#include "gf2perfect/perfect.hpp"
#include "gf2perfect/sigma.hpp"

namespace gf2p {

nlohmann::ordered_json factorization_json(const Factorization& f);
nlohmann::ordered_json certificate_json(const PerfectCertificate& c);
nlohmann::ordered_json report_json(const SearchReport& r);
nlohmann::ordered_json sigma_json(const SigmaValue& v);

/// "<hex> <text> <factorization> perfect:<bool>"
std::string certificate_record(const PerfectCertificate& c);
/// One certificate_record per found perfect, newline-terminated.
std::string report_records(const SearchReport& r);
/// Deterministic one-liner: search name, bounds, counts and found hex list.
std::string report_summary(const SearchReport& r);

enum class LemmaId { Lemma1iii, Lemma1iv, Lemma4, Lemma5, Lemma6, Theorem8, MinimalPrimeParity };

/// Accepts "1iii", "1iv", "4", "5", "6", "8", "parity".
std::optional<LemmaId> parse_lemma_id(std::string_view name);
const char* to_string(LemmaId id) noexcept;

/// Unset fields take the per-lemma defaults (1iv: 16; 1iii: 40; 4: 20,10;
/// 5 and 6: 6,4; 8: 30). For parity, an unset poly checks every catalog entry.
struct LemmaBounds {
  std::optional<int> max_deg;
  std::optional<int> m_bound;
  std::optional<int> h_bound;
  std::optional<int> k_bound;
  std::optional<int> p_deg_bound;
  std::optional<int> n_bound;
  std::optional<Poly> poly;
};

struct LemmaVerdict {
  LemmaId id = LemmaId::Lemma4;
  bool holds = false;
  nlohmann::ordered_json record;
};

/// Runs one bounded verifier and compares with the expected outcome. A
/// parity check on a non-perfect poly throws std::invalid_argument.
LemmaVerdict verify_lemma(LemmaId id, const LemmaBounds& bounds);

}  // namespace gf2p
