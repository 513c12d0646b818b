#include "convlab/io.hpp"

#include <fstream>
#include <sstream>

namespace convlab {

std::string format_element(const Field& f, fe a) {
  if (f.m() == 1) return std::to_string(a);
  std::vector<std::uint64_t> c = f.coeffs(a);
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ':';
    out += std::to_string(c[i]);
  }
  return out;
}

fe parse_element(const Field& f, const std::string& tok) {
  std::vector<std::uint64_t> c;
  std::size_t pos = 0;
  while (pos <= tok.size()) {
    std::size_t next = tok.find(':', pos);
    std::string digit = tok.substr(pos, next == std::string::npos ? next : next - pos);
    if (digit.empty() || digit.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad field element '" + tok + "'");
    c.push_back(std::stoull(digit));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (c.size() != (f.m() == 1 ? 1 : f.m()))
    throw std::invalid_argument("element '" + tok + "' has the wrong digit count");
  for (std::uint64_t d : c)
    if (d >= f.p()) throw std::invalid_argument("element digit out of range in '" + tok + "'");
  return f.from_coeffs(c);
}

std::string format_field(const Field& f) {
  std::string out = "field " + std::to_string(f.p()) + " " + std::to_string(f.m());
  for (std::uint64_t c : f.modulus()) out += " " + std::to_string(c);
  return out;
}

void write_mat(std::ostream& os, const Mat& m) {
  os << "mat " << m.rows() << " " << m.cols() << "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << " ";
      os << format_element(m.field(), m.at(i, j));
    }
    os << "\n";
  }
}

void write_code(std::ostream& os, const ConvCode& c) {
  os << "convlab v1\n" << format_field(c.field) << "\n";
  os << "params " << c.params.n << " " << c.params.k << " " << c.params.delta << "\n";
  os << "gen " << c.G.n() << " " << c.G.k() << " " << c.G.dmax() << "\n";
  for (int t = 0; t <= c.G.dmax(); ++t) write_mat(os, c.G.coeff(t));
}

void write_realization(std::ostream& os, const Realization& r) {
  os << "convlab v1\n" << format_field(r.field) << "\n";
  os << "real " << r.params.n << " " << r.params.k << " " << r.params.delta << "\n";
  write_mat(os, r.A);
  write_mat(os, r.B);
  write_mat(os, r.C);
  write_mat(os, r.D);
}

void write_markov(std::ostream& os, const MarkovSeq& seq) {
  os << "convlab v1\n" << format_field(seq.field) << "\n";
  os << "markov " << seq.params.n << " " << seq.params.k << " " << seq.params.M << "\n";
  for (const Mat& b : seq.blocks) write_mat(os, b);
}

namespace {

/// Line-oriented token reader that remembers the current line number for
/// diagnostics. Blank lines are skipped.
class LineReader {
 public:
  explicit LineReader(std::istream& is) : is_(is) {}

  std::size_t line() const { return line_; }

  std::vector<std::string> next_line() {
    std::string raw;
    while (std::getline(is_, raw)) {
      ++line_;
      std::istringstream ss(raw);
      std::vector<std::string> toks;
      std::string t;
      while (ss >> t) toks.push_back(t);
      if (!toks.empty()) return toks;
    }
    throw ParseError(line_ + 1, "unexpected end of file");
  }

 private:
  std::istream& is_;
  std::size_t line_ = 0;
};

long to_long(const LineReader& r, const std::string& tok) {
  try {
    std::size_t used = 0;
    long v = std::stol(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(r.line(), "expected an integer, got '" + tok + "'");
  }
}

Field read_field(LineReader& r) {
  std::vector<std::string> t = r.next_line();
  if (t[0] != "field" || t.size() < 3) throw ParseError(r.line(), "expected a field header");
  long p = to_long(r, t[1]);
  long m = to_long(r, t[2]);
  if (p < 2 || m < 1) throw ParseError(r.line(), "bad field parameters");
  if (t.size() != static_cast<std::size_t>(3 + m + 1))
    throw ParseError(r.line(), "field header needs m+1 modulus coefficients");
  Field f = Field::make(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(m));
  for (long i = 0; i <= m; ++i)
    if (to_long(r, t[3 + i]) != static_cast<long>(f.modulus()[i]))
      throw ParseError(r.line(), "unsupported field modulus (only the canonical one)");
  return f;
}

Mat read_mat(LineReader& r, const Field& f) {
  std::vector<std::string> t = r.next_line();
  if (t[0] != "mat" || t.size() != 3) throw ParseError(r.line(), "expected a matrix literal");
  long rows = to_long(r, t[1]);
  long cols = to_long(r, t[2]);
  if (rows < 0 || cols < 0) throw ParseError(r.line(), "bad matrix dimensions");
  Mat m(f, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (long i = 0; i < rows; ++i) {
    if (cols == 0) continue;
    std::vector<std::string> row = r.next_line();
    if (row.size() != static_cast<std::size_t>(cols))
      throw ParseError(r.line(), "matrix row has the wrong entry count");
    for (long j = 0; j < cols; ++j) {
      try {
        m.set(i, j, parse_element(f, row[j]));
      } catch (const std::invalid_argument& e) {
        throw ParseError(r.line(), e.what());
      }
    }
  }
  return m;
}

// Minimal-partial-realization degree straight from raw blocks; the Markov
// file format carries no degree of its own.
int degree_from_blocks(const std::vector<Mat>& blocks, int n, int k) {
  int M = static_cast<int>(blocks.size()) - 1;
  int nk = n - k;
  const Field& f = blocks[0].field();
  auto han = [&](int x, int y) {
    Mat h(f, static_cast<std::size_t>(x) * nk, static_cast<std::size_t>(y) * k);
    for (int s = 1; s <= x; ++s)
      for (int t = 1; t <= y; ++t)
        for (int i = 0; i < nk; ++i)
          for (int j = 0; j < k; ++j)
            h.set((s - 1) * nk + i, (t - 1) * k + j, blocks[s + t - 1].at(i, j));
    return h;
  };
  long d = 0;
  for (int x = 1; x <= M; ++x) d += static_cast<long>(rank(han(x, M + 1 - x)));
  for (int x = 1; x <= M - 1; ++x) d -= static_cast<long>(rank(han(x, M - x)));
  return static_cast<int>(d);
}

}  // namespace

AnyObject read_any(std::istream& is) {
  LineReader r(is);
  std::vector<std::string> magic = r.next_line();
  if (magic.size() != 2 || magic[0] != "convlab" || magic[1] != "v1")
    throw ParseError(r.line(), "missing 'convlab v1' magic line");
  Field f = read_field(r);
  std::vector<std::string> head = r.next_line();

  if (head[0] == "params") {
    if (head.size() != 4) throw ParseError(r.line(), "bad params header");
    int n = static_cast<int>(to_long(r, head[1]));
    int k = static_cast<int>(to_long(r, head[2]));
    int delta = static_cast<int>(to_long(r, head[3]));
    CodeParams p;
    try {
      p = CodeParams::make(n, k, delta);
    } catch (const std::exception& e) {
      throw ParseError(r.line(), e.what());
    }
    std::vector<std::string> gh = r.next_line();
    std::size_t gen_line = r.line();
    if (gh.size() != 4 || gh[0] != "gen") throw ParseError(r.line(), "expected a gen header");
    long gn = to_long(r, gh[1]);
    long gk = to_long(r, gh[2]);
    long dmax = to_long(r, gh[3]);
    if (gn != n || gk != k || dmax < 0)
      throw ParseError(r.line(), "gen header disagrees with params");
    std::vector<Mat> coeffs;
    for (long t = 0; t <= dmax; ++t) {
      Mat c = read_mat(r, f);
      if (c.rows() != static_cast<std::size_t>(n) || c.cols() != static_cast<std::size_t>(k))
        throw ParseError(r.line(), "generator coefficient has the wrong shape");
      coeffs.push_back(std::move(c));
    }
    try {
      return ConvCode(f, p, PolyMat(f, n, k, std::move(coeffs)));
    } catch (const std::exception& e) {
      throw ParseError(gen_line, e.what());
    }
  }

  if (head[0] == "real") {
    if (head.size() != 4) throw ParseError(r.line(), "bad real header");
    int n = static_cast<int>(to_long(r, head[1]));
    int k = static_cast<int>(to_long(r, head[2]));
    int delta = static_cast<int>(to_long(r, head[3]));
    std::size_t head_line = r.line();
    CodeParams p;
    try {
      p = CodeParams::make(n, k, delta);
    } catch (const std::exception& e) {
      throw ParseError(r.line(), e.what());
    }
    Mat a = read_mat(r, f);
    Mat b = read_mat(r, f);
    Mat c = read_mat(r, f);
    Mat d = read_mat(r, f);
    try {
      return Realization(f, p, std::move(a), std::move(b), std::move(c), std::move(d));
    } catch (const std::exception& e) {
      throw ParseError(head_line, e.what());
    }
  }

  if (head[0] == "markov") {
    if (head.size() != 4) throw ParseError(r.line(), "bad markov header");
    int n = static_cast<int>(to_long(r, head[1]));
    int k = static_cast<int>(to_long(r, head[2]));
    int M = static_cast<int>(to_long(r, head[3]));
    std::size_t head_line = r.line();
    if (k <= 0 || k >= n || M < 1) throw ParseError(r.line(), "bad markov parameters");
    std::vector<Mat> blocks;
    for (int t = 0; t <= M; ++t) {
      Mat b = read_mat(r, f);
      if (b.rows() != static_cast<std::size_t>(n - k) ||
          b.cols() != static_cast<std::size_t>(k))
        throw ParseError(r.line(), "markov block has the wrong shape");
      blocks.push_back(std::move(b));
    }
    int delta = degree_from_blocks(blocks, n, k);
    CodeParams p;
    try {
      p = CodeParams::make(n, k, delta);
    } catch (const std::exception& e) {
      throw ParseError(head_line, e.what());
    }
    if (p.M != M)
      throw ParseError(head_line, "sequence length M=" + std::to_string(M) +
                                      " disagrees with the derived degree " +
                                      std::to_string(delta));
    return MarkovSeq(f, p, std::move(blocks));
  }

  throw ParseError(r.line(), "unknown section '" + head[0] + "'");
}

AnyObject read_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open '" + path + "'");
  return read_any(is);
}

void write_file(const std::string& path, const AnyObject& obj) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write '" + path + "'");
  std::visit([&](const auto& o) {
    using T = std::decay_t<decltype(o)>;
    if constexpr (std::is_same_v<T, ConvCode>) write_code(os, o);
    else if constexpr (std::is_same_v<T, Realization>) write_realization(os, o);
    else write_markov(os, o);
  }, obj);
}

}  // namespace convlab
