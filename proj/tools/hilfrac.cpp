// hilfrac: command-line front end.
//
// Exit codes: 0 accepted, 1 rejected, 2 usage or format error, 3 resource
// limit, 4 internal consistency failure.

#include <fstream>
#include <iostream>
#include <algorithm>
#include <limits>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hilfrac/bigint.hpp"
#include "hilfrac/bigraded.hpp"
#include "hilfrac/binomial.hpp"
#include "hilfrac/error.hpp"
#include "hilfrac/fractal_seq.hpp"
#include "hilfrac/json_io.hpp"
#include "hilfrac/lex_ideal.hpp"
#include "hilfrac/limits.hpp"

namespace {

using hilfrac::BigInt;
using nlohmann::json;
namespace jio = hilfrac::json_io;

enum Exit : int { kAccepted = 0, kRejected = 1, kUsage = 2, kResource = 3, kInternal = 4 };

std::vector<BigInt> parse_sequence(const std::string& text) {
  static const std::regex number(R"(\s*(-?\d+)\s*)");
  std::vector<BigInt> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::smatch m;
    if (!std::regex_match(item, m, number)) {
      throw hilfrac::InvalidArgument("not an integer: '" + item + "'");
    }
    out.emplace_back(m[1].str());
  }
  if (!text.empty() && text.back() == ',') throw hilfrac::InvalidArgument("trailing comma");
  return out;
}

std::string join(const std::vector<BigInt>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k].str();
  return s;
}

json to_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::int64_t>::max()) return static_cast<std::int64_t>(v);
  return v.str();
}

json read_json(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw hilfrac::InvalidArgument("cannot open " + path);
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw hilfrac::InvalidArgument(path + ": " + e.what());
  }
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw hilfrac::InvalidArgument("cannot write " + path);
  out << j.dump(2) << '\n';
}

struct Context {
  bool json_out = false;
  hilfrac::Limits limits;
};

// osequence ---------------------------------------------------------------

struct OSequenceArgs {
  std::string seq;
  bool growth = false;
  std::optional<std::size_t> n;
};

int cmd_osequence(const Context& ctx, const OSequenceArgs& args) {
  const auto h = parse_sequence(args.seq);
  const auto verdict = hilfrac::is_o_sequence(h);
  std::optional<hilfrac::GrowthResult> growth;
  if (verdict.accepted && (args.growth || args.n)) {
    growth = hilfrac::growth_from_lengths(h, args.n, ctx.limits);
  }
  const bool accepted = verdict.accepted && (!growth || growth->ok);
  const std::size_t index = verdict.accepted && growth ? growth->index : verdict.index;
  const auto bound = verdict.accepted && growth ? growth->bound : verdict.bound;

  if (ctx.json_out) {
    json out{{"accepted", accepted}};
    if (!accepted) {
      out["index"] = index;
      out["bound"] = bound ? to_json(*bound) : json(nullptr);
    }
    if (accepted && growth) {
      out["n"] = growth->growth.n;
      out["growth"] = growth->growth.levels;
    }
    std::cout << out.dump() << '\n';
  } else if (accepted) {
    std::cout << "accepted\n";
    if (growth) {
      for (std::size_t d = 0; d < growth->growth.levels.size(); ++d) {
        std::cout << "tau_" << d << " = " << hilfrac::to_string(growth->growth.levels[d]) << '\n';
      }
    }
  } else {
    std::cout << "rejected at index " << index;
    if (bound) {
      std::cout << ": h_" << index << " = " << (index < h.size() ? h[index].str() : "?")
                << " exceeds bound " << bound->str();
    } else if (index == 0) {
      std::cout << ": h_0 must be 1";
    }
    std::cout << '\n';
  }
  return accepted ? kAccepted : kRejected;
}

// fractal -----------------------------------------------------------------

struct FractalArgs {
  std::size_t n = 0;
  std::size_t d = 0;
  std::optional<std::string> entry;
  std::optional<std::size_t> prefix;
};

int cmd_fractal(const Context& ctx, const FractalArgs& args) {
  if (args.n == 0) throw hilfrac::InvalidArgument("n must be positive");
  const hilfrac::FractalExpansion phi(args.n, ctx.limits);
  const BigInt length = phi.level_length(args.d);
  const BigInt sum = hilfrac::bracket_power_sum(args.n, args.d);
  if (args.entry) {
    const auto a = parse_sequence(*args.entry);
    if (a.size() != 1) throw hilfrac::InvalidArgument("--entry takes one integer");
    const BigInt value = phi.entry(args.d, a[0]);
    if (ctx.json_out) {
      std::cout << json{{"n", args.n}, {"d", args.d}, {"a", to_json(a[0])}, {"entry", to_json(value)}}
                       .dump()
                << '\n';
    } else {
      std::cout << value << '\n';
    }
    return kAccepted;
  }
  const auto seq = args.prefix ? phi.prefix(args.d, *args.prefix) : phi.level(args.d);
  if (ctx.json_out) {
    std::cout << json{{"n", args.n},
                      {"d", args.d},
                      {"length", to_json(length)},
                      {"sum", to_json(sum)},
                      {"sequence", seq}}
                     .dump()
              << '\n';
  } else {
    std::cout << hilfrac::to_string(seq) << '\n';
  }
  return kAccepted;
}

// lex ---------------------------------------------------------------------

struct LexArgs {
  std::string seq;
  std::optional<std::size_t> n;
  bool gens = false;
  bool betti = false;
  bool oracle = false;
};

int cmd_lex(const Context& ctx, const LexArgs& args) {
  const auto h = parse_sequence(args.seq);
  const auto growth = hilfrac::growth_from_lengths(h, args.n, ctx.limits);
  if (!growth.ok) {
    if (ctx.json_out) {
      std::cout << json{{"accepted", false},
                        {"index", growth.index},
                        {"bound", growth.bound ? to_json(*growth.bound) : json(nullptr)}}
                       .dump()
                << '\n';
    } else {
      std::cout << "rejected at index " << growth.index;
      if (growth.bound) {
        std::cout << ": h_" << growth.index << " = "
                  << (growth.index < h.size() ? h[growth.index].str() : "?") << " exceeds bound "
                  << growth.bound->str();
      }
      std::cout << '\n';
    }
    return kRejected;
  }
  const auto ideal = hilfrac::build_lex_ideal(growth.growth);
  const auto gens = hilfrac::minimal_generator_monomials(ideal);
  const std::size_t n = ideal.vars();

  std::optional<hilfrac::BettiTable> table;
  bool agrees = true;
  if (args.betti || args.oracle) {
    table = hilfrac::ek_betti(ideal);
    if (args.oracle) {
      const auto check = hilfrac::koszul_betti_oracle(gens, n, n, ideal.top_degree() + n);
      agrees = check == *table;
      if (!agrees) {
        throw hilfrac::ConsistencyError("Eliahou-Kervaire table disagrees with Koszul homology:\n" +
                                        hilfrac::to_string(*table) + "\nvs\n" +
                                        hilfrac::to_string(check));
      }
    }
  }

  if (ctx.json_out) {
    json out{{"accepted", true}, {"n", n}, {"hilbert", json::array()}};
    for (const auto& t : ideal.cutoffs()) out["hilbert"].push_back(to_json(t));
    if (args.gens) {
      out["generators"] = json::array();
      for (const auto& g : gens) out["generators"].push_back(jio::encode(g));
    }
    if (table) out["betti"] = jio::encode(*table);
    if (args.oracle) out["oracle"] = "agrees";
    std::cout << out.dump() << '\n';
    return kAccepted;
  }
  std::cout << "lex segment ideal in " << n << " variables, hilbert " << join(ideal.cutoffs())
            << ", " << gens.size() << " minimal generators\n";
  if (args.gens) {
    std::string line;
    for (std::size_t k = 0; k < gens.size(); ++k) line += (k ? ", " : "") + hilfrac::to_string(gens[k]);
    std::cout << (gens.empty() ? "(no generators)" : line) << '\n';
  }
  if (table) std::cout << hilfrac::to_string(*table) << '\n';
  if (args.oracle) std::cout << "oracle: agrees\n";
  return kAccepted;
}

// bigraded ----------------------------------------------------------------

struct BigradedArgs {
  std::string table;
  std::string mode = "first";
  std::size_t jobs = 1;
  std::optional<std::string> ideal_out;
  std::optional<std::string> verify;
};

void print_certificate(const hilfrac::Certificate& cert) {
  for (std::size_t i = 0; i < cert.rows(); ++i) {
    for (std::size_t j = 0; j < cert.cols(); ++j) {
      const auto& mat = cert.at(i, j);
      std::cout << "  M(" << i << ',' << j << ") " << mat.rows() << 'x' << mat.cols()
                << " rows " << hilfrac::to_string(mat.row_lengths()) << '\n';
    }
  }
}

int verify_certificates(const Context& ctx, const hilfrac::BigradedTable& table,
                        const std::string& path) {
  const json doc = read_json(path);
  std::vector<json> items;
  if (doc.is_object() && doc.contains("certificates")) {
    for (const auto& c : doc.at("certificates")) items.push_back(c);
  } else {
    items.push_back(doc);
  }
  if (items.empty()) throw hilfrac::InvalidArgument(path + ": no certificate");
  json results = json::array();
  bool all_ok = true;
  for (const auto& item : items) {
    const auto check = hilfrac::validate_certificate(table, jio::decode_certificate(item, table));
    all_ok &= check.ok;
    if (check.ok) {
      results.push_back({{"ok", true}});
    } else {
      results.push_back({{"ok", false},
                         {"i", check.position.i},
                         {"j", check.position.j},
                         {"reason", check.reason}});
    }
  }
  if (ctx.json_out) {
    std::cout << json{{"accepted", all_ok}, {"checks", results}}.dump() << '\n';
  } else {
    for (std::size_t k = 0; k < results.size(); ++k) {
      const auto& r = results[k];
      std::cout << "certificate " << k + 1 << ": ";
      if (r["ok"]) {
        std::cout << "valid\n";
      } else {
        std::cout << "invalid at (" << r["i"] << ',' << r["j"] << "): "
                  << r["reason"].get<std::string>() << '\n';
      }
    }
  }
  return all_ok ? kAccepted : kRejected;
}

int cmd_bigraded(const Context& ctx, const BigradedArgs& args) {
  const auto table = jio::decode_table(read_json(args.table));
  if (args.verify) return verify_certificates(ctx, table, *args.verify);

  hilfrac::CertifyOptions options;
  options.jobs = args.jobs;
  options.limits = ctx.limits;
  if (args.mode == "first") {
    options.mode = hilfrac::CertifyMode::kFirst;
  } else if (args.mode == "count") {
    options.mode = hilfrac::CertifyMode::kCount;
  } else {
    options.mode = hilfrac::CertifyMode::kEnumerate;
  }
  const auto result = hilfrac::certify_fractal(table, options);

  if (result.accepted && args.ideal_out) {
    write_json(*args.ideal_out, jio::encode(hilfrac::certificate_to_ideal(result.certificates.front())));
  }

  if (ctx.json_out) {
    json out{{"accepted", result.accepted}, {"mode", args.mode}, {"nodes", result.nodes}};
    if (result.accepted) {
      out["window"] = hilfrac::to_string(result.window);
      out["count"] = result.count;
      out["certificates"] = json::array();
      for (const auto& c : result.certificates) out["certificates"].push_back(jio::encode(c));
    } else if (result.witness) {
      out["witness"] = {{"i", result.witness->i}, {"j", result.witness->j}};
    }
    std::cout << out.dump() << '\n';
  } else if (result.accepted) {
    std::cout << "accepted (" << hilfrac::to_string(result.window) << ")\n";
    if (options.mode != hilfrac::CertifyMode::kFirst) {
      std::cout << "certificates: " << result.count << '\n';
    }
    for (std::size_t k = 0; k < result.certificates.size(); ++k) {
      if (options.mode == hilfrac::CertifyMode::kCount) break;
      std::cout << "certificate " << k + 1 << ":\n";
      print_certificate(result.certificates[k]);
    }
  } else {
    std::cout << "rejected";
    if (result.witness) std::cout << " at (" << result.witness->i << ',' << result.witness->j << ')';
    std::cout << '\n';
  }
  return result.accepted ? kAccepted : kRejected;
}

// koszul / bihilbert -------------------------------------------------------

struct KoszulArgs {
  std::string ideal;
  std::optional<std::size_t> hom;
  std::optional<std::size_t> deg;
};

int cmd_koszul(const Context& ctx, const KoszulArgs& args) {
  const auto doc = jio::decode_monomial_ideal(read_json(args.ideal));
  std::size_t top = 0;
  for (const auto& g : doc.generators) top = std::max(top, g.degree());
  const std::size_t hom = args.hom.value_or(doc.n);
  const auto table =
      hilfrac::koszul_betti_oracle(doc.generators, doc.n, hom, args.deg.value_or(top + hom));
  if (ctx.json_out) {
    std::cout << jio::encode(table).dump() << '\n';
  } else {
    std::cout << hilfrac::to_string(table) << '\n';
  }
  return kAccepted;
}

struct BihilbertArgs {
  std::string ideal;
  bool certify = false;
};

int cmd_bihilbert(const Context& ctx, const BihilbertArgs& args) {
  const auto doc = jio::decode_bigraded_ideal(read_json(args.ideal));
  if (doc.rows * doc.cols > ctx.limits.max_cells) {
    throw hilfrac::ResourceLimit("window exceeds the cell limit");
  }
  const auto table = hilfrac::bigraded_hilbert(doc.generators, doc.n, doc.m, doc.rows, doc.cols);
  std::optional<hilfrac::CertifyResult> result;
  if (args.certify) {
    hilfrac::CertifyOptions options;
    options.limits = ctx.limits;
    result = hilfrac::certify_fractal(table, options);
  }
  if (ctx.json_out) {
    json out = jio::encode(table);
    if (result) out["accepted"] = result->accepted;
    std::cout << out.dump() << '\n';
  } else {
    for (const auto& row : table.values()) {
      for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? "\t" : "") << row[j];
      std::cout << '\n';
    }
    if (result) std::cout << (result->accepted ? "accepted" : "rejected") << '\n';
  }
  return !result || result->accepted ? kAccepted : kRejected;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert functions, fractal sequences and lex ideals"};
  app.require_subcommand(1);
  Context ctx;
  app.add_flag("--json", ctx.json_out, "Emit JSON instead of text");

  OSequenceArgs os;
  auto* os_cmd = app.add_subcommand("osequence", "Test whether h_0,h_1,... is an O-sequence");
  os_cmd->add_option("seq", os.seq, "Comma-separated entries, e.g. 1,3,3,4")->required();
  os_cmd->add_flag("--growth", os.growth, "Print the coherent growth");
  os_cmd->add_option("--n", os.n, "Number of variables (defaults to h_1)");

  FractalArgs fr;
  auto* fr_cmd = app.add_subcommand("fractal", "Print [n]^d, an entry, or a prefix");
  fr_cmd->add_option("n", fr.n)->required();
  fr_cmd->add_option("d", fr.d)->required();
  auto* entry_opt = fr_cmd->add_option("--entry", fr.entry, "1-based index a; prints [n]^d_a");
  fr_cmd->add_option("--prefix", fr.prefix, "Print only the first L entries")->excludes(entry_opt);

  LexArgs lx;
  auto* lx_cmd = app.add_subcommand("lex", "Lex segment ideal with the given Hilbert function");
  lx_cmd->add_option("seq", lx.seq, "Hilbert function h_0,h_1,...")->required();
  lx_cmd->add_option("--n", lx.n, "Number of variables (defaults to h_1)");
  lx_cmd->add_flag("--gens", lx.gens, "List minimal generators");
  lx_cmd->add_flag("--betti", lx.betti, "Print Eliahou-Kervaire Betti numbers");
  lx_cmd->add_flag("--oracle", lx.oracle, "Cross-check Betti numbers with Koszul homology");

  BigradedArgs bg;
  auto* bg_cmd = app.add_subcommand("bigraded", "Certify a bigraded table as a fractal function");
  bg_cmd->add_option("table", bg.table, "Table JSON file, - for stdin")->required();
  bg_cmd->add_option("--mode", bg.mode)->check(CLI::IsMember({"first", "count", "enumerate"}));
  bg_cmd->add_option("--jobs", bg.jobs, "Worker threads")->check(CLI::Range(1, 256));
  bg_cmd->add_option("--ideal-out", bg.ideal_out, "Write the bilex ideal of the first certificate");
  bg_cmd->add_option("--verify", bg.verify, "Check certificate JSON against the table");

  KoszulArgs kz;
  auto* kz_cmd = app.add_subcommand("koszul", "Betti numbers of S/I by Koszul homology");
  kz_cmd->add_option("ideal", kz.ideal, "Ideal JSON file, - for stdin")->required();
  kz_cmd->add_option("--hom", kz.hom, "Largest homological index (default n)");
  kz_cmd->add_option("--deg", kz.deg, "Largest internal degree");

  BihilbertArgs bh;
  auto* bh_cmd = app.add_subcommand("bihilbert", "Bigraded Hilbert table of a monomial ideal");
  bh_cmd->add_option("ideal", bh.ideal, "Bigraded ideal JSON file, - for stdin")->required();
  bh_cmd->add_flag("--certify", bh.certify, "Also run the certifier on the table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    ctx.limits = hilfrac::Limits::from_env();
    if (*os_cmd) return cmd_osequence(ctx, os);
    if (*fr_cmd) return cmd_fractal(ctx, fr);
    if (*lx_cmd) return cmd_lex(ctx, lx);
    if (*bg_cmd) return cmd_bigraded(ctx, bg);
    if (*kz_cmd) return cmd_koszul(ctx, kz);
    if (*bh_cmd) return cmd_bihilbert(ctx, bh);
  } catch (const hilfrac::SearchLimitExceeded& e) {
    std::cerr << "error: " << e.what() << " (" << e.partial_count()
              << " certificates found before stopping)\n";
    return kResource;
  } catch (const hilfrac::ResourceLimit& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResource;
  } catch (const hilfrac::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const hilfrac::ConsistencyError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
