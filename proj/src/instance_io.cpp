#include "corrclust/instance_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <vector>

namespace corrclust {
namespace {

std::vector<std::string> tokenize(const std::string& raw) {
  std::string line = raw.substr(0, raw.find('#'));
  std::istringstream is(line);
  std::vector<std::string> tokens;
  for (std::string tok; is >> tok;) tokens.push_back(tok);
  return tokens;
}

long long parse_int(const std::string& tok, int line, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, std::string("expected integer for ") + what + ", got '" + tok + "'");
  return value;
}

double parse_real(const std::string& tok, int line, const char* what) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, std::string("expected real for ") + what + ", got '" + tok + "'");
  if (!std::isfinite(value))
    throw ParseError(line, std::string("non-finite value for ") + what + " (encode forbidden pairs "
                     "with a large finite w- and a finite TAU)");
  if (value < 0) throw ParseError(line, std::string("negative value for ") + what);
  return value;
}

}  // namespace

WeightedInstance parse_instance(std::istream& in) {
  enum class Stage { kMagic, kHeader, kMu, kEdges } stage = Stage::kMagic;
  int n = 0;
  long long K = 0;
  std::optional<Tau> tau;
  std::vector<double> mu;
  PairTable<EdgeWeight> weights;
  PairTable<bool> seen;

  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto tok = tokenize(raw);
    if (tok.empty()) continue;
    switch (stage) {
      case Stage::kMagic:
        if (tok.size() != 2 || tok[0] != "CORRCLUST" || tok[1] != "1")
          throw ParseError(lineno, "expected 'CORRCLUST 1'");
        stage = Stage::kHeader;
        break;
      case Stage::kHeader: {
        if (tok.size() != 6 || tok[0] != "N" || tok[2] != "K" || tok[4] != "TAU")
          throw ParseError(lineno, "expected 'N <n> K <K> TAU <real|INF>'");
        long long nn = parse_int(tok[1], lineno, "N");
        if (nn < 0 || nn > 100000) throw ParseError(lineno, "N out of range");
        n = static_cast<int>(nn);
        K = parse_int(tok[3], lineno, "K");
        if (K < 0) throw ParseError(lineno, "K must be nonnegative");
        if (tok[5] == "INF") {
          tau = Tau::infinite();
        } else {
          double t = parse_real(tok[5], lineno, "TAU");
          if (t < 1.0) throw ParseError(lineno, "TAU must be >= 1 or INF");
          tau = Tau::finite(t);
        }
        weights = PairTable<EdgeWeight>(n);
        seen = PairTable<bool>(n, false);
        stage = Stage::kMu;
        break;
      }
      case Stage::kMu:
        if (tok[0] != "MU") throw ParseError(lineno, "expected 'MU' line");
        if (tok.size() != static_cast<std::size_t>(n) + 1)
          throw ParseError(lineno, "MU needs " + std::to_string(n) + " values, got " +
                                       std::to_string(tok.size() - 1));
        for (std::size_t i = 1; i < tok.size(); ++i) mu.push_back(parse_real(tok[i], lineno, "MU"));
        stage = Stage::kEdges;
        break;
      case Stage::kEdges: {
        if (tok[0] != "E" || tok.size() != 5) throw ParseError(lineno, "expected 'E <u> <v> <wplus> <wminus>'");
        long long u = parse_int(tok[1], lineno, "u");
        long long v = parse_int(tok[2], lineno, "v");
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(lineno, "vertex id out of range");
        if (u == v) throw ParseError(lineno, "self-pair is not an edge");
        auto a = static_cast<Vertex>(u), b = static_cast<Vertex>(v);
        if (seen(a, b)) throw ParseError(lineno, "duplicate pair {" + tok[1] + "," + tok[2] + "}");
        seen(a, b) = true;
        weights(a, b) = EdgeWeight{parse_real(tok[3], lineno, "wplus"), parse_real(tok[4], lineno, "wminus")};
        break;
      }
    }
  }
  if (stage == Stage::kMagic) throw ParseError(lineno, "empty input");
  if (stage != Stage::kEdges) throw ParseError(lineno, "unexpected end of input");
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!seen(u, v))
        throw ParseError(lineno, "missing pair {" + std::to_string(u) + "," + std::to_string(v) + "}");
  return WeightedInstance(std::move(weights), std::move(mu), K, *tau);
}

WeightedInstance parse_instance_string(const std::string& text) {
  std::istringstream is(text);
  return parse_instance(is);
}

WeightedInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_instance(in);
}

void write_instance(std::ostream& out, const WeightedInstance& instance) {
  auto old_precision = out.precision(17);
  out << "CORRCLUST 1\n";
  out << "N " << instance.n() << " K " << instance.K() << " TAU " << instance.tau().to_string() << "\n";
  out << "MU";
  for (double m : instance.mu()) out << ' ' << m;
  out << "\n";
  for_each_pair(instance.n(), [&](Vertex u, Vertex v) {
    const EdgeWeight& w = instance.weight(u, v);
    out << "E " << u << ' ' << v << ' ' << w.plus << ' ' << w.minus << "\n";
  });
  out.precision(old_precision);
}

std::string format_instance(const WeightedInstance& instance) {
  std::ostringstream os;
  write_instance(os, instance);
  return os.str();
}

}  // namespace corrclust
