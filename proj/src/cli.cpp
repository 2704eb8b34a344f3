#include "termrank/cli.hpp"

#include <atomic>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "termrank/classops.hpp"
#include "termrank/errors.hpp"
#include "termrank/matrix.hpp"
#include "termrank/oracle.hpp"
#include "termrank/rank.hpp"
#include "termrank/realize.hpp"

namespace termrank::cli {

namespace {

using nlohmann::json;

std::atomic<bool> g_interrupted{false};

void on_interrupt(int) { g_interrupted.store(true); }

struct MatrixArgs {
  std::string file;
  std::string inline_text;
};

void add_matrix_options(CLI::App* cmd, MatrixArgs& args) {
  cmd->add_option("--matrix", args.file, "matrix file (rows of 0/1, # comments)");
  cmd->add_option("--inline", args.inline_text, "inline matrix, ';' separates rows");
}

BinaryMatrix load_matrix(const MatrixArgs& args) {
  if (args.file.empty() == args.inline_text.empty())
    throw CLI::ValidationError("matrix input", "give exactly one of --matrix or --inline");
  if (!args.file.empty()) {
    std::ifstream in(args.file);
    if (!in) throw Error("cannot open matrix file: " + args.file);
    std::ostringstream buf;
    buf << in.rdbuf();
    return BinaryMatrix::parse(buf.str());
  }
  std::string text = args.inline_text;
  std::replace(text.begin(), text.end(), ';', '\n');
  return BinaryMatrix::parse(text);
}

std::string inline_form(const BinaryMatrix& a) {
  std::string text = a.serialize();
  if (!text.empty() && text.back() == '\n') text.pop_back();
  std::replace(text.begin(), text.end(), '\n', ';');
  return text;
}

json cells_json(const std::vector<std::pair<int, int>>& cells) {
  json out = json::array();
  for (const auto& [i, j] : cells) out.push_back({i + 1, j + 1});
  return out;
}

json indices_json(const std::vector<int>& v) {
  json out = json::array();
  for (int x : v) out.push_back(x + 1);
  return out;
}

void print_cells(std::ostream& out, const std::vector<std::pair<int, int>>& cells) {
  for (const auto& [i, j] : cells) out << " (" << i + 1 << "," << j + 1 << ")";
}

void print_indices(std::ostream& out, const std::vector<int>& v) {
  for (int x : v) out << " " << x + 1;
}

void emit(std::ostream& out, bool as_json, const std::string& command, json inputs,
          json result, json certificates = nullptr) {
  if (!as_json) return;  // human output is written by the caller
  json doc{{"v", 1}, {"command", command}, {"inputs", std::move(inputs)},
           {"result", std::move(result)}};
  if (!certificates.is_null()) doc["certificates"] = std::move(certificates);
  out << doc.dump(2) << "\n";
}

long long enumeration_limit(long long flag_value, bool flag_given) {
  if (flag_given) return flag_value;
  if (const char* env = std::getenv("TERMRANK_LIMIT")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw Error("TERMRANK_LIMIT must be a positive integer");
  }
  return classops::kDefaultEnumLimit;
}

struct Options {
  bool json = false;
  MatrixArgs matrix;
  std::string pair_text;
  std::string inner_text;
  int t = 1;
  int tmax = 1;
  long long p = 0;
  std::vector<int> cells;
  long long steps = 0;
  std::uint64_t seed = 0;
  long long limit = classops::kDefaultEnumLimit;
  bool limit_given = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"t-term ranks of (0,1)-matrices and their degree classes"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --json appear after the subcommand name
  Options opt;
  app.add_flag("--json", opt.json, "emit machine-readable JSON");

  const auto positive_int = CLI::Range(1, std::numeric_limits<int>::max());
  const auto nonnegative_ll = CLI::Range(0ll, std::numeric_limits<long long>::max());
  const auto positive_ll = CLI::Range(1ll, std::numeric_limits<long long>::max());
  const auto add_t = [&](CLI::App* cmd) {
    cmd->add_option("--t", opt.t, "row multiplicity bound")->required()->check(positive_int);
  };

  // ---- matrix subcommands ----
  CLI::App* rank_cmd = app.add_subcommand("rank", "t-term rank with a witness selection");
  add_matrix_options(rank_cmd, opt.matrix);
  add_t(rank_cmd);
  rank_cmd->callback([&] {
    const BinaryMatrix a = load_matrix(opt.matrix);
    const RankResult res = t_term_rank(a, opt.t);
    if (opt.json) {
      emit(out, true, "rank", {{"matrix", inline_form(a)}, {"t", opt.t}},
           {{"t", opt.t}, {"rho", res.value}},
           {{"selection", cells_json(res.witness.cells)}});
    } else {
      out << "rho_" << opt.t << " = " << res.value << "\n";
      out << "witness:";
      print_cells(out, res.witness.cells);
      out << "\n";
    }
  });

  CLI::App* cover_cmd = app.add_subcommand("cover", "minimum line cover (dual certificate)");
  add_matrix_options(cover_cmd, opt.matrix);
  add_t(cover_cmd);
  cover_cmd->callback([&] {
    const BinaryMatrix a = load_matrix(opt.matrix);
    const LineCover cover = min_cover(a, opt.t);
    if (opt.json) {
      emit(out, true, "cover", {{"matrix", inline_form(a)}, {"t", opt.t}},
           {{"t", opt.t}, {"weight", cover.weight()}},
           {{"cover", {{"rows", indices_json(cover.rows)}, {"cols", indices_json(cover.cols)}}}});
    } else {
      out << "weight = " << cover.weight() << "\n";
      out << "rows:";
      print_indices(out, cover.rows);
      out << "\ncols:";
      print_indices(out, cover.cols);
      out << "\n";
    }
  });

  CLI::App* profile_cmd = app.add_subcommand("profile", "rank profile rho_0..rho_tmax");
  add_matrix_options(profile_cmd, opt.matrix);
  profile_cmd->add_option("--tmax", opt.tmax, "largest t to report")
      ->required()
      ->check(positive_int);
  profile_cmd->callback([&] {
    const BinaryMatrix a = load_matrix(opt.matrix);
    const RankProfile profile = rank_profile(a, opt.tmax);
    if (opt.json) {
      emit(out, true, "profile", {{"matrix", inline_form(a)}, {"tmax", opt.tmax}},
           {{"tmax", opt.tmax}, {"values", profile.values}});
    } else {
      for (std::size_t k = 0; k < profile.values.size(); ++k)
        out << "rho_" << k << " = " << profile.values[k] << "\n";
    }
  });

  CLI::App* strength_cmd = app.add_subcommand("strength", "least t with rho_t = n");
  add_matrix_options(strength_cmd, opt.matrix);
  strength_cmd->callback([&] {
    const BinaryMatrix a = load_matrix(opt.matrix);
    const int gamma = strength(a);
    if (opt.json) {
      emit(out, true, "strength", {{"matrix", inline_form(a)}}, {{"gamma", gamma}});
    } else {
      out << "gamma = " << gamma << "\n";
    }
  });

  CLI::App* nested_cmd = app.add_subcommand("nested", "prefix-optimal layer decomposition");
  add_matrix_options(nested_cmd, opt.matrix);
  add_t(nested_cmd);
  nested_cmd->callback([&] {
    const BinaryMatrix a = load_matrix(opt.matrix);
    const NestedSelections nested = nested_selections(a, opt.t);
    if (opt.json) {
      json layers = json::array();
      for (const auto& layer : nested.layers) layers.push_back(cells_json(layer));
      json sizes = json::array();
      for (const auto& layer : nested.layers) sizes.push_back(layer.size());
      emit(out, true, "nested", {{"matrix", inline_form(a)}, {"t", opt.t}},
           {{"t", opt.t}, {"layer_sizes", sizes}}, {{"layers", layers}});
    } else {
      for (std::size_t k = 0; k < nested.layers.size(); ++k) {
        out << "layer " << k + 1 << " (size " << nested.layers[k].size() << "):";
        print_cells(out, nested.layers[k]);
        out << "\n";
      }
    }
  });

  CLI::App* interchange_cmd =
      app.add_subcommand("interchange", "apply a 2x2 interchange move");
  add_matrix_options(interchange_cmd, opt.matrix);
  interchange_cmd
      ->add_option("--cells", opt.cells, "i1,i2,j1,j2 (1-based rows then columns)")
      ->required()
      ->delimiter(',')
      ->expected(4);
  interchange_cmd->callback([&] {
    const BinaryMatrix a = load_matrix(opt.matrix);
    for (int v : opt.cells)
      if (v < 1) throw CLI::ValidationError("--cells", "indices are 1-based");
    const InterchangeMove move{opt.cells[0] - 1, opt.cells[1] - 1, opt.cells[2] - 1,
                               opt.cells[3] - 1};
    const BinaryMatrix b = apply_interchange(a, move);
    if (opt.json) {
      emit(out, true, "interchange",
           {{"matrix", inline_form(a)},
            {"cells", {opt.cells[0], opt.cells[1], opt.cells[2], opt.cells[3]}}},
           {{"matrix", inline_form(b)}});
    } else {
      out << b.serialize();
    }
  });

  CLI::App* pad_cmd = app.add_subcommand("pad", "bordered matrix whose full rank tests rho_t >= p");
  add_matrix_options(pad_cmd, opt.matrix);
  add_t(pad_cmd);
  pad_cmd->add_option("--p", opt.p, "rank threshold")->required()->check(nonnegative_ll);
  pad_cmd->callback([&] {
    const BinaryMatrix a = load_matrix(opt.matrix);
    const BinaryMatrix b = padded_matrix(a, opt.t, opt.p);
    if (opt.json) {
      emit(out, true, "pad", {{"matrix", inline_form(a)}, {"t", opt.t}, {"p", opt.p}},
           {{"rows", b.rows()}, {"cols", b.cols()}, {"matrix", inline_form(b)}});
    } else {
      out << b.serialize();
    }
  });

  // ---- class subcommands ----
  CLI::App* class_cmd = app.add_subcommand("class", "operations on a class A(R,S)");
  class_cmd->require_subcommand(1);
  const auto add_pair = [&](CLI::App* cmd) {
    cmd->add_option("--pair", opt.pair_text, "degree pair, e.g. \"R=2,2,1;S=2,2,1\"")
        ->required();
  };

  CLI::App* check_cmd = class_cmd->add_subcommand("check", "is the class nonempty?");
  add_pair(check_cmd);
  check_cmd->callback([&] {
    const DegreePair pair = DegreePair::parse(opt.pair_text);
    const bool ok = classops::is_nonempty(pair);
    if (opt.json) {
      emit(out, true, "class check", {{"pair", pair.serialize()}}, {{"nonempty", ok}});
    } else {
      out << "nonempty = " << (ok ? "true" : "false") << "\n";
    }
  });

  CLI::App* construct_cmd = class_cmd->add_subcommand("construct", "canonical member");
  add_pair(construct_cmd);
  construct_cmd->callback([&] {
    const DegreePair pair = DegreePair::parse(opt.pair_text);
    const BinaryMatrix a = classops::construct_member(pair);
    if (opt.json) {
      emit(out, true, "class construct", {{"pair", pair.serialize()}},
           {{"matrix", inline_form(a)}});
    } else {
      out << a.serialize();
    }
  });

  CLI::App* structure_cmd = class_cmd->add_subcommand("structure", "structure matrix");
  add_pair(structure_cmd);
  structure_cmd->callback([&] {
    const DegreePair pair = DegreePair::parse(opt.pair_text);
    const classops::StructureMatrix grid = classops::structure_matrix(pair);
    if (opt.json) {
      json rows = json::array();
      for (int k = 0; k <= grid.m; ++k) {
        json row = json::array();
        for (int l = 0; l <= grid.n; ++l) row.push_back(grid.at(k, l));
        rows.push_back(std::move(row));
      }
      emit(out, true, "class structure", {{"pair", pair.serialize()}}, {{"t_values", rows}});
    } else {
      for (int k = 0; k <= grid.m; ++k) {
        for (int l = 0; l <= grid.n; ++l) out << (l ? " " : "") << grid.at(k, l);
        out << "\n";
      }
    }
  });

  CLI::App* maxrank_cmd = class_cmd->add_subcommand("maxrank", "maximum t-term rank over the class");
  add_pair(maxrank_cmd);
  add_t(maxrank_cmd);
  maxrank_cmd->callback([&] {
    const DegreePair pair = DegreePair::parse(opt.pair_text);
    const long long value = classops::max_t_term_rank(pair, opt.t);
    if (opt.json) {
      emit(out, true, "class maxrank", {{"pair", pair.serialize()}, {"t", opt.t}},
           {{"t", opt.t}, {"max_rho", value}});
    } else {
      out << "max_rho_" << opt.t << " = " << value << "\n";
    }
  });

  CLI::App* enumerate_cmd = class_cmd->add_subcommand("enumerate", "list every member");
  add_pair(enumerate_cmd);
  enumerate_cmd->add_option("--limit", opt.limit, "member cap (default 10^6 or TERMRANK_LIMIT)")
      ->check(positive_ll);
  enumerate_cmd->callback([&] {
    opt.limit_given = enumerate_cmd->count("--limit") > 0;
    const DegreePair pair = DegreePair::parse(opt.pair_text);
    const long long limit = enumeration_limit(opt.limit, opt.limit_given);
    g_interrupted.store(false);
    const auto previous = std::signal(SIGINT, on_interrupt);
    long long count = 0;
    bool partial = false;
    json members = json::array();
    try {
      classops::for_each_member(pair, limit, [&](const BinaryMatrix& a) {
        ++count;
        if (opt.json) {
          members.push_back(inline_form(a));
        } else {
          out << "# member " << count << "\n" << a.serialize() << "\n";
        }
        if (g_interrupted.load()) {
          partial = true;
          return false;
        }
        return true;
      });
    } catch (...) {
      std::signal(SIGINT, previous);
      throw;
    }
    std::signal(SIGINT, previous);
    if (opt.json) {
      emit(out, true, "class enumerate", {{"pair", pair.serialize()}, {"limit", limit}},
           {{"count", count}, {"partial", partial}, {"members", std::move(members)}});
    } else {
      if (partial) out << "# partial (interrupted)\n";
      out << "# total = " << count << "\n";
    }
  });

  CLI::App* sample_cmd = class_cmd->add_subcommand("sample", "random member via interchange walk");
  add_pair(sample_cmd);
  sample_cmd->add_option("--steps", opt.steps, "walk length (lazy steps)")
      ->required()
      ->check(nonnegative_ll);
  sample_cmd->add_option("--seed", opt.seed, "generator seed (default 0)");
  sample_cmd->callback([&] {
    const DegreePair pair = DegreePair::parse(opt.pair_text);
    const BinaryMatrix a = classops::sample_class(pair, opt.steps, opt.seed);
    if (opt.json) {
      emit(out, true, "class sample",
           {{"pair", pair.serialize()}, {"steps", opt.steps}, {"seed", opt.seed}},
           {{"matrix", inline_form(a)}});
    } else {
      out << a.serialize();
    }
  });

  CLI::App* realize_cmd =
      class_cmd->add_subcommand("realize", "member attaining every maximum k-term rank, k <= t");
  add_pair(realize_cmd);
  add_t(realize_cmd);
  realize_cmd->callback([&] {
    const DegreePair pair = DegreePair::parse(opt.pair_text);
    const realize::JointRealization joint = realize::joint_realizer(pair, opt.t);
    if (opt.json) {
      emit(out, true, "class realize", {{"pair", pair.serialize()}, {"t", opt.t}},
           {{"max_profile", joint.max_profile.values},
            {"partition", joint.partition},
            {"A", inline_form(joint.A)},
            {"C", inline_form(joint.C)}});
    } else {
      out << "max_profile =";
      for (int v : joint.max_profile.values) out << " " << v;
      out << "\npartition =";
      for (int v : joint.partition) out << " " << v;
      out << "\nA =\n" << joint.A.serialize();
      out << "C =\n" << joint.C.serialize();
    }
  });

  CLI::App* nestedpair_cmd =
      class_cmd->add_subcommand("nestedpair", "nested members of two classes");
  add_pair(nestedpair_cmd);
  nestedpair_cmd->add_option("--inner", opt.inner_text, "inner degree pair")->required();
  add_t(nestedpair_cmd);
  nestedpair_cmd->callback([&] {
    const DegreePair outer = DegreePair::parse(opt.pair_text);
    const DegreePair inner = DegreePair::parse(opt.inner_text);
    const realize::NestedPairResult res = realize::nested_pair(outer, inner, opt.t);
    if (opt.json) {
      emit(out, true, "class nestedpair",
           {{"pair", outer.serialize()}, {"inner", inner.serialize()}, {"t", opt.t}},
           {{"A", inline_form(res.outer)}, {"Aprime", inline_form(res.inner)}});
    } else {
      out << "A =\n" << res.outer.serialize();
      out << "A' =\n" << res.inner.serialize();
    }
  });

  // ---- oracle subcommands ----
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force reference checks");
  oracle_cmd->require_subcommand(1);

  CLI::App* orank_cmd = oracle_cmd->add_subcommand("rank", "exhaustive t-term rank");
  add_matrix_options(orank_cmd, opt.matrix);
  add_t(orank_cmd);
  orank_cmd->callback([&] {
    const BinaryMatrix a = load_matrix(opt.matrix);
    const int value = oracle::brute_rank(a, opt.t);
    if (opt.json) {
      emit(out, true, "oracle rank", {{"matrix", inline_form(a)}, {"t", opt.t}},
           {{"t", opt.t}, {"rho", value}});
    } else {
      out << "rho_" << opt.t << " = " << value << "\n";
    }
  });

  CLI::App* ocover_cmd = oracle_cmd->add_subcommand("cover", "exhaustive minimum cover weight");
  add_matrix_options(ocover_cmd, opt.matrix);
  add_t(ocover_cmd);
  ocover_cmd->callback([&] {
    const BinaryMatrix a = load_matrix(opt.matrix);
    const long long value = oracle::brute_cover(a, opt.t);
    if (opt.json) {
      emit(out, true, "oracle cover", {{"matrix", inline_form(a)}, {"t", opt.t}},
           {{"t", opt.t}, {"weight", value}});
    } else {
      out << "weight = " << value << "\n";
    }
  });

  CLI::App* omaxrank_cmd = oracle_cmd->add_subcommand("maxrank", "class maximum by enumeration");
  add_pair(omaxrank_cmd);
  add_t(omaxrank_cmd);
  omaxrank_cmd->add_option("--limit", opt.limit, "member cap")->check(positive_ll);
  omaxrank_cmd->callback([&] {
    opt.limit_given = omaxrank_cmd->count("--limit") > 0;
    const DegreePair pair = DegreePair::parse(opt.pair_text);
    const long long limit = enumeration_limit(opt.limit, opt.limit_given);
    const long long value = oracle::brute_max_rank(pair, opt.t, limit);
    if (opt.json) {
      emit(out, true, "oracle maxrank", {{"pair", pair.serialize()}, {"t", opt.t}},
           {{"t", opt.t}, {"max_rho", value}});
    } else {
      out << "max_rho_" << opt.t << " = " << value << "\n";
    }
  });

  CLI::App* onested_cmd = oracle_cmd->add_subcommand("nestedpair", "nested pair existence");
  add_pair(onested_cmd);
  onested_cmd->add_option("--inner", opt.inner_text, "inner degree pair")->required();
  onested_cmd->add_option("--limit", opt.limit, "member cap")->check(positive_ll);
  onested_cmd->callback([&] {
    opt.limit_given = onested_cmd->count("--limit") > 0;
    const DegreePair outer = DegreePair::parse(opt.pair_text);
    const DegreePair inner = DegreePair::parse(opt.inner_text);
    const long long limit = enumeration_limit(opt.limit, opt.limit_given);
    const bool exists = oracle::brute_nested_pair(outer, inner, limit);
    if (opt.json) {
      emit(out, true, "oracle nestedpair",
           {{"pair", outer.serialize()}, {"inner", inner.serialize()}},
           {{"exists", exists}});
    } else {
      out << "exists = " << (exists ? "true" : "false") << "\n";
    }
  });

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("termrank");
  for (const std::string& a : args) argv_storage.push_back(a);
  std::vector<const char*> argv;
  argv.reserve(argv_storage.size());
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? argc - 1 : 0);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace termrank::cli
