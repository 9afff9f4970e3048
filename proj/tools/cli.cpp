#include "cli.hpp"

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <new>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cwforest/classical.hpp"
#include "cwforest/error.hpp"
#include "cwforest/forest.hpp"
#include "cwforest/verify.hpp"

namespace cwforest::cli {

namespace {

constexpr std::uint64_t kUnbounded = std::numeric_limits<std::uint64_t>::max();

struct Limits {
  std::uint64_t max_depth = kDefaultMaxRow;
  std::uint64_t max_height = kDefaultMaxHeight;
  std::uint64_t max_word_length = kDefaultMaxWordLength;
  bool no_limits = false;

  std::size_t depth() const { return no_limits ? std::numeric_limits<std::size_t>::max() : max_depth; }
  std::uint64_t height() const { return no_limits ? kUnbounded : max_height; }
  std::size_t word_length() const { return no_limits ? std::numeric_limits<std::size_t>::max() : max_word_length; }
};

std::uint64_t default_max_depth() {
  const char* env = std::getenv("CWFOREST_MAX_DEPTH");
  if (env == nullptr || *env == '\0') {
    return kDefaultMaxRow;
  }
  std::string text(env);
  if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 18) {
    throw DomainError("CWFOREST_MAX_DEPTH must be a nonnegative integer, got '" + text + "'");
  }
  return std::stoull(text);
}

void add_limit_flags(CLI::App* cmd, Limits& limits) {
  cmd->add_option("--max-depth", limits.max_depth, "Largest row or depth accepted")->capture_default_str();
  cmd->add_option("--max-height", limits.max_height, "Largest height bound accepted")->capture_default_str();
  cmd->add_option("--max-word-length", limits.max_word_length, "Largest word length accepted")
      ->capture_default_str();
  cmd->add_flag("--no-limits", limits.no_limits, "Acknowledge and lift every resource cap");
}

// Text rendering keeps integers bare ("5", not "5/1").
std::string render_json(const Rational& q) {
  return "{\"n\":" + q.numer().str() + ",\"d\":" + q.denom().str() + "}";
}

std::string render_terms(const std::vector<BigInt>& terms) {
  std::string s = "[";
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (k > 0) {
      s += ",";
    }
    s += terms[k].str();
  }
  return s + "]";
}

struct Options {
  Limits limits;
  std::uint64_t u = 1;
  std::uint64_t v = 1;
  std::string root = "1";
  std::uint64_t n = 0;
  std::string format = "text";
  std::string fraction;
  std::uint64_t depth = 0;
  std::uint64_t height = 0;
  std::uint64_t maxlen = 0;
};

void add_uv(CLI::App* cmd, Options& o) {
  cmd->add_option("--u", o.u, "Parameter of L_u = [[1,0],[u,1]]")->required();
  cmd->add_option("--v", o.v, "Parameter of R_v = [[1,v],[0,1]]")->required();
}

int emit_report(const VerificationReport& report, std::ostream& out) {
  out << report.to_json().dump() << "\n";
  return report.passed ? kOk : kWitnessFound;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Forests of rational trees generated by L_u and R_v", "cwforest"};
  app.require_subcommand(1);
  Options o;

  try {
    o.limits.max_depth = default_max_depth();
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  auto* row_cmd = app.add_subcommand("row", "Print row n of the tree with the given root");
  add_uv(row_cmd, o);
  row_cmd->add_option("--root", o.root, "Root of the tree, as a or a/b")->capture_default_str();
  row_cmd->add_option("--n", o.n, "Row number")->required();
  row_cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  add_limit_flags(row_cmd, o.limits);

  auto* locate_cmd = app.add_subcommand("locate", "Find the root, path and address of a rational");
  add_uv(locate_cmd, o);
  locate_cmd->add_option("q", o.fraction, "Positive rational, as a or a/b")->required();
  locate_cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  add_limit_flags(locate_cmd, o.limits);

  auto* verify_cmd = app.add_subcommand("verify", "Exhaustively check a claim and print a JSON report");
  verify_cmd->require_subcommand(1);
  auto* symmetry_cmd = verify_cmd->add_subcommand("symmetry", "Mirror symmetry between (u,v) at z and (v,u) at 1/z");
  add_uv(symmetry_cmd, o);
  symmetry_cmd->add_option("--root", o.root, "Root z")->capture_default_str();
  symmetry_cmd->add_option("--depth", o.depth, "Deepest row checked")->required();
  add_limit_flags(symmetry_cmd, o.limits);
  auto* partition_cmd = verify_cmd->add_subcommand("partition", "Every rational up to a height has one orphan root");
  add_uv(partition_cmd, o);
  partition_cmd->add_option("--height", o.height, "Height bound")->required();
  add_limit_flags(partition_cmd, o.limits);
  auto* freeness_cmd = verify_cmd->add_subcommand("freeness", "All short words give distinct matrices");
  add_uv(freeness_cmd, o);
  freeness_cmd->add_option("--maxlen", o.maxlen, "Longest word checked")->required();
  add_limit_flags(freeness_cmd, o.limits);
  auto* range_cmd = verify_cmd->add_subcommand("range", "0 < L_u(w) < 1/u and R_v(w) > v");
  add_uv(range_cmd, o);
  range_cmd->add_option("--height", o.height, "Height bound")->required();
  add_limit_flags(range_cmd, o.limits);

  auto* cf_cmd = app.add_subcommand("cf", "Continued fraction and Calkin-Wilf row of a rational");
  cf_cmd->add_option("q", o.fraction, "Positive rational")->required();
  auto* successor_cmd = app.add_subcommand("successor", "Next entry in the Calkin-Wilf row");
  successor_cmd->add_option("q", o.fraction, "Positive rational")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  std::ostringstream buf;
  try {
    if (*row_cmd) {
      ForestConfig cfg(o.u, o.v);
      std::vector<Rational> values = row(cfg, Rational::parse(o.root), o.n, o.limits.depth());
      if (o.format == "text") {
        for (std::size_t i = 0; i < values.size(); ++i) {
          buf << (i ? " " : "") << values[i].to_string();
        }
        buf << "\n";
      } else if (o.format == "csv") {
        buf << "index,numerator,denominator\n";
        for (std::size_t i = 0; i < values.size(); ++i) {
          buf << i + 1 << "," << values[i].numer().str() << "," << values[i].denom().str() << "\n";
        }
      } else {
        buf << "[";
        for (std::size_t i = 0; i < values.size(); ++i) {
          buf << (i ? "," : "") << render_json(values[i]);
        }
        buf << "]\n";
      }
    } else if (*locate_cmd) {
      ForestConfig cfg(o.u, o.v);
      Rational q = Rational::parse(o.fraction);
      std::size_t steps = o.limits.no_limits ? std::numeric_limits<std::size_t>::max() : o.limits.max_height;
      Location loc = decompose(cfg, q, steps);
      if (o.format == "json") {
        buf << "{\"root\":" << render_json(loc.root) << ",\"path\":\"" << loc.word.to_string()
            << "\",\"row\":" << loc.address.row() << ",\"index\":" << loc.address.index().str() << "}\n";
      } else {
        buf << "root=" << loc.root.to_string() << " path=" << loc.word.to_string() << " row=" << loc.address.row()
            << " index=" << loc.address.index().str() << "\n";
      }
    } else if (*cf_cmd) {
      Rational q = Rational::parse(o.fraction);
      buf << render_terms(continued_fraction(q)) << " row=" << classical::cw_row_of(q).str() << "\n";
    } else if (*successor_cmd) {
      buf << classical::newman_successor(Rational::parse(o.fraction)).to_string() << "\n";
    } else {
      VerificationReport report;
      if (*symmetry_cmd) {
        report = verify_symmetry(o.u, o.v, Rational::parse(o.root), o.depth, o.limits.depth());
      } else if (*partition_cmd) {
        report = verify_partition(o.u, o.v, o.height, o.limits.height());
      } else if (*freeness_cmd) {
        report = verify_freeness(o.u, o.v, o.maxlen, o.limits.word_length());
      } else {
        report = verify_range(o.u, o.v, o.height, o.limits.height());
      }
      int code = emit_report(report, buf);
      out << buf.str();
      return code;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const LimitError& e) {
    err << "error: " << e.what() << " (raise it with --max-* or pass --no-limits)\n";
    return kResourceCap;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kResourceCap;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kResourceCap;
  }
  out << buf.str();
  return kOk;
}

}  // namespace cwforest::cli
