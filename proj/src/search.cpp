#include "convlab/search.hpp"

#include <sstream>
#include <stdexcept>

namespace convlab {

std::vector<Field> SearchConfig::default_ladder(std::uint64_t char_p) {
  std::vector<Field> ladder;
  if (char_p == 0) {
    for (std::uint64_t m = 2; m <= 8; ++m) ladder.push_back(Field::make(2, m));
    return ladder;
  }
  if (!is_prime_u64(char_p)) throw std::invalid_argument("characteristic must be prime");
  std::uint64_t q = char_p;
  for (std::uint64_t m = 1; q <= 512; ++m, q *= char_p)
    ladder.push_back(Field::make(char_p, m));
  return ladder;
}

namespace {

std::uint64_t sat_pow(std::uint64_t q, std::uint64_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (r > cap / q) return cap + 1;
    r *= q;
  }
  return r;
}

bool oracle_feasible(const Field& f, const CodeParams& p, const OracleBudget& b) {
  std::uint64_t cand = sat_pow(f.q(), static_cast<std::uint64_t>(p.M + 1) * p.k,
                               b.max_candidates);
  std::uint64_t states = sat_pow(f.q(), p.delta, b.max_states);
  return cand <= b.max_candidates && states <= b.max_states;
}

OracleReport run_oracles(const Realization& r, const SearchConfig& cfg) {
  OracleReport rep;
  if (cfg.oracle == OracleMode::Off) return rep;
  if (cfg.oracle == OracleMode::Auto &&
      !oracle_feasible(r.field, r.params, cfg.budget))
    return rep;
  rep.d_L = column_distance_from_realization(r, r.params.L, cfg.budget);
  rep.d_M = column_distance_from_realization(r, r.params.M, cfg.budget);
  rep.d_free = free_distance_oracle(r, cfg.budget);
  if (!rep.d_L || !rep.d_M || !rep.d_free) {
    rep.status = OracleReport::Status::Infeasible;
    return rep;
  }
  if (*rep.d_L != r.params.col_bound(r.params.L))
    throw std::logic_error("oracle contradicts the square-submatrix certificate");
  if (*rep.d_M != r.params.singleton || *rep.d_free != r.params.singleton)
    throw std::logic_error("oracle contradicts the surplus-row certificate");
  rep.status = OracleReport::Status::Confirmed;
  return rep;
}

}  // namespace

SearchResult search(const SearchConfig& cfg) {
  if (cfg.ladder.empty()) throw std::invalid_argument("field ladder must be nonempty");
  for (std::size_t i = 1; i < cfg.ladder.size(); ++i)
    if (cfg.ladder[i].q() <= cfg.ladder[i - 1].q())
      throw std::invalid_argument("field ladder must have strictly increasing size");
  if (cfg.trials < 1) throw std::invalid_argument("trial count must be positive");

  const CodeParams& p = cfg.params;
  int nk = p.n - p.k;
  Rng rng(cfg.seed);
  SearchResult res;

  for (const Field& f : cfg.ladder) {
    ++res.fields_tried;
    for (int trial = 0; trial < cfg.trials; ++trial) {
      ++res.trials_used;
      std::vector<Mat> prefix;
      for (int t = 0; t <= p.L; ++t) {
        Mat b(f, nk, p.k);
        for (int i = 0; i < nk; ++i)
          for (int j = 0; j < p.k; ++j) b.set(i, j, f.random_element(rng));
        prefix.push_back(std::move(b));
      }
      CertReport mdp = certify_mdp(prefix, p, cfg.cert_ceiling);
      if (mdp.status == CertReport::Status::Refused)
        throw std::runtime_error("certification ceiling exceeded; parameters too large");
      if (!mdp.ok()) continue;

      std::optional<MarkovSeq> seq;
      if (p.r >= 1) {
        try {
          seq = complete_fm(prefix, p, rng, cfg.fm_retries, cfg.cert_ceiling,
                            &res.fm_retries_used);
        } catch (const field_too_small&) {
          continue;
        }
      } else {
        seq = MarkovSeq(f, p, prefix);
      }
      CertReport smds = certify_smds(seq->blocks, p, cfg.cert_ceiling);
      if (!smds.ok()) continue;
      if (minimal_degree(*seq) != p.delta) continue;

      Realization r = partial_realization(*seq, p.delta);
      ConvCode code = code_from_realization(r);
      OracleReport orep = run_oracles(r, cfg);

      res.success = true;
      res.field = f;
      res.seq = std::move(seq);
      res.realization = std::move(r);
      res.code = std::move(code);
      res.mdp_report = mdp;
      res.smds_report = smds;
      res.oracle = orep;
      return res;
    }
  }
  return res;
}

std::string render_cert(const std::string& name, const CertReport& rep) {
  std::string out = "cert " + name + " ";
  switch (rep.status) {
    case CertReport::Status::Pass: out += "true"; break;
    case CertReport::Status::Fail: out += "false"; break;
    case CertReport::Status::Refused: out += "refused"; break;
  }
  out += "\n";
  if (rep.witness) {
    out += "witness rows";
    for (std::size_t i : rep.witness->rows) out += " " + std::to_string(i);
    out += " cols";
    for (std::size_t j : rep.witness->cols) out += " " + std::to_string(j);
    out += "\n";
  }
  out += "counts scanned=" + std::to_string(rep.scanned) +
         " pruned=" + std::to_string(rep.pruned) + "\n";
  return out;
}

std::string render_report(const SearchConfig& cfg, const SearchResult& res) {
  std::ostringstream os;
  os << "convlab v1 search\n";
  os << "request " << cfg.params.n << " " << cfg.params.k << " " << cfg.params.delta
     << "\n";
  os << "seed " << cfg.seed << "\n";
  os << "trials " << cfg.trials << "\n";
  os << "status " << (res.success ? "success" : "failed") << "\n";
  os << "fields_tried " << res.fields_tried << "\n";
  os << "trials_used " << res.trials_used << "\n";
  os << "fm_retries " << res.fm_retries_used << "\n";
  if (!res.success) return os.str();

  os << format_field(*res.field) << "\n";
  os << render_cert("MDP", res.mdp_report);
  os << render_cert("sMDS", res.smds_report);
  switch (res.oracle.status) {
    case OracleReport::Status::Confirmed: os << "oracle confirmed\n"; break;
    case OracleReport::Status::Skipped: os << "oracle skipped\n"; break;
    case OracleReport::Status::Infeasible: os << "oracle infeasible\n"; break;
  }
  if (res.oracle.d_L) os << "dcol " << cfg.params.L << " " << *res.oracle.d_L << "\n";
  if (res.oracle.d_M && cfg.params.M != cfg.params.L)
    os << "dcol " << cfg.params.M << " " << *res.oracle.d_M << "\n";
  if (res.oracle.d_free) os << "dfree " << *res.oracle.d_free << "\n";

  os << "begin markov\n";
  write_markov(os, *res.seq);
  os << "end markov\n";
  os << "begin realization\n";
  write_realization(os, *res.realization);
  os << "end realization\n";
  os << "begin code\n";
  write_code(os, *res.code);
  os << "end code\n";
  return os.str();
}

}  // namespace convlab
