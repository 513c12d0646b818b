#pragma once

#include "convlab/io.hpp"

namespace convlab {

enum class OracleMode { On, Off, Auto };

/// One certified-search request: try `trials` random Markov prefixes per
/// field, walking a ladder of fields of strictly increasing size.
struct SearchConfig {
  CodeParams params;
  std::vector<Field> ladder;  // nonempty, strictly increasing q
  int trials = 1000;
  std::uint64_t seed = 0;
  std::uint64_t cert_ceiling = 10'000'000;
  OracleBudget budget;
  OracleMode oracle = OracleMode::Auto;
  int fm_retries = 64;

  /// GF(4), GF(8), ..., GF(256); with a forced characteristic, the powers of
  /// p up to 512.
  static std::vector<Field> default_ladder(std::uint64_t char_p = 0);
};

struct OracleReport {
  enum class Status { Confirmed, Skipped, Infeasible };
  Status status = Status::Skipped;
  std::optional<long> d_L, d_M, d_free;
};

struct SearchResult {
  bool success = false;
  std::optional<Field> field;
  std::optional<MarkovSeq> seq;
  std::optional<Realization> realization;
  std::optional<ConvCode> code;
  CertReport mdp_report, smds_report;
  OracleReport oracle;
  int trials_used = 0;       // over all fields
  int fields_tried = 0;
  int fm_retries_used = 0;   // completion resamples over all trials
};

/// The end-to-end pipeline: sample F_0..F_L, certify the square criterion,
/// complete to F_M, certify the surplus criterion, realize, regenerate the
/// code, and (budget permitting) confirm every distance with the brute-force
/// oracles. The first fully verified hit is returned; a failed search returns
/// success = false with the counters filled in.
SearchResult search(const SearchConfig& config);

/// Stable line-oriented report; byte-identical for identical config and seed.
std::string render_report(const SearchConfig& config, const SearchResult& result);

/// `cert <name> <true|false|refused>` plus optional witness and the
/// scanned/pruned counts; shared by the search report and the certify command.
std::string render_cert(const std::string& name, const CertReport& rep);

}  // namespace convlab
