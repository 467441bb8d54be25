#include "slackcomm/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "slackcomm/catalog.hpp"
#include "slackcomm/convert.hpp"
#include "slackcomm/csv.hpp"
#include "slackcomm/extension.hpp"
#include "slackcomm/labels.hpp"
#include "slackcomm/protocol.hpp"
#include "slackcomm/protocol_io.hpp"
#include "slackcomm/reductions.hpp"
#include "slackcomm/slack.hpp"

namespace slackcomm::cli {

namespace {

// Raised for bad flag combinations that CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a check fails; the message is the counterexample.
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::map<std::string, PolytopeFamily> kFamilies{
    {"spanning-tree", PolytopeFamily::spanning_tree},
    {"perfect-matching", PolytopeFamily::perfect_matching},
    {"stable-set", PolytopeFamily::stable_set},
};

const std::vector<std::string> kProtocols{"spanning-tree", "perfect-matching", "claw-free",
                                          "hint-edge"};

Graph make_graph(const std::string& kind, int n) {
  if (n < 1) {
    throw UsageError("--n must be positive");
  }
  if (kind == "complete") {
    return Graph::complete(n);
  }
  if (kind == "path") {
    return Graph::path(n);
  }
  if (kind == "cycle") {
    std::vector<Edge> edges = Graph::path(n).edges();
    if (n >= 3) {
      edges.emplace_back(1, n);
    }
    return Graph(n, std::move(edges));
  }
  throw UsageError("unknown graph '" + kind + "'");
}

VertexSet parse_set(const std::string& text) {
  std::vector<Vertex> members;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) {
      continue;
    }
    try {
      std::size_t used = 0;
      members.push_back(std::stoi(item, &used));
      if (used != item.size()) {
        throw std::invalid_argument(item);
      }
    } catch (const std::logic_error&) {
      throw UsageError("cannot parse set element '" + item + "'");
    }
  }
  std::sort(members.begin(), members.end());
  return VertexSet(std::move(members));
}

std::string braces(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += (i ? "," : "") + std::to_string(s.members()[i]);
  }
  return out + "}";
}

std::string braces(const EdgeSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Edge& e = s.members()[i];
    out += (i ? ",{" : "{") + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
  }
  return out + "}";
}

// Writes `text` to --out when given, else to `out`.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) {
    throw UsageError("cannot open '" + path + "' for writing");
  }
  file << text;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot open '" + path + "'");
  }
  return in;
}

struct NamedProtocol {
  ProtocolTree tree;
  std::optional<LabeledMatrix> target;  // absent for hint-edge
};

NamedProtocol build_protocol(const std::string& name, int n, const std::string& graph) {
  if (name == "spanning-tree") {
    return {spanning_tree_protocol(n),
            slack_matrix(PolytopeFamily::spanning_tree, Graph::complete(n), false)};
  }
  if (name == "perfect-matching") {
    return {perfect_matching_protocol(n, greedy_matching_cover(n)),
            slack_matrix(PolytopeFamily::perfect_matching, Graph::complete(n), false)};
  }
  if (name == "claw-free") {
    const Graph g = make_graph(graph, n);
    return {clawfree_stable_set_protocol(g), slack_matrix(PolytopeFamily::stable_set, g, false)};
  }
  if (name == "hint-edge") {
    return {hint_edge_protocol(n), std::nullopt};
  }
  throw UsageError("unknown protocol '" + name + "'");
}

std::string mismatch_text(const Mismatch& m) {
  return "FAIL: row " + m.row + " col " + m.col + " expected " + to_string(m.expected) + " got " +
         to_string(m.actual);
}

ExpectationCheck check_named(const NamedProtocol& p, int n) {
  if (p.target) {
    return computes_in_expectation(p.tree, *p.target);
  }
  return verify_hint_edge_protocol(p.tree, n);
}

// Protocol for the full slack matrix: the catalog protocol on S' stacked with
// the nonnegativity rows.
ProtocolTree full_slack_protocol(PolytopeFamily family, int n, const Graph& g) {
  const LabeledMatrix full = slack_matrix(family, g, true);
  const auto [rest, coordinates] = split_nonnegativity(full);
  ProtocolTree base = [&] {
    switch (family) {
      case PolytopeFamily::spanning_tree:
        return spanning_tree_protocol(n);
      case PolytopeFamily::perfect_matching:
        return perfect_matching_protocol(n, greedy_matching_cover(n));
      case PolytopeFamily::stable_set:
        break;
    }
    return clawfree_stable_set_protocol(g);
  }();
  return combine_row_partition(base, nonnegativity_rows_protocol(coordinates.rows(), coordinates));
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args) {
    CLI::App app{"Slack matrices, randomized protocols and extended formulations"};
    app.name("slackcomm");
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every command");

    add_slack(app);
    add_protocol(app);
    add_convert(app);
    add_cover(app);
    add_extend(app);
    add_reduce(app);
    add_verify(app);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out_, err_);
      return code == 0 ? kExitOk : kExitUsage;
    }
    try {
      action_();
    } catch (const VerificationError& e) {
      out_ << e.what() << '\n';
      return kExitVerificationFailed;
    } catch (const UsageError& e) {
      err_ << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const std::invalid_argument& e) {
      err_ << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const std::out_of_range& e) {
      err_ << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const std::exception& e) {
      err_ << "error: " << e.what() << '\n';
      return kExitVerificationFailed;
    }
    return kExitOk;
  }

 private:
  void add_slack(CLI::App& app) {
    auto* cmd = app.add_subcommand("slack", "Write a slack matrix as CSV");
    cmd->add_option("--family", family_, "spanning-tree | perfect-matching | stable-set")
        ->required()
        ->check(CLI::IsMember(keys(kFamilies)));
    cmd->add_option("--n", n_, "Vertex count")->required();
    cmd->add_option("--graph", graph_, "complete | path | cycle");
    cmd->add_flag("--full", full_, "Include the nonnegativity rows");
    cmd->add_flag("--support", support_, "Write the 0/1 support instead");
    cmd->add_option("--out", out_path_, "Output file");
    cmd->callback([this] {
      action_ = [this] {
        LabeledMatrix s = slack_matrix(kFamilies.at(family_), make_graph(graph_or("complete"), n_), full_);
        if (support_) {
          s = support_matrix(s);
        }
        emit(to_csv(s), out_path_, out_);
      };
    });
  }

  void add_protocol(CLI::App& app) {
    auto* cmd = app.add_subcommand("protocol", "Write a catalog protocol in text form");
    cmd->add_option("--name", name_, "spanning-tree | perfect-matching | claw-free | hint-edge")
        ->required()
        ->check(CLI::IsMember(kProtocols));
    cmd->add_option("--n", n_, "Vertex count")->required();
    cmd->add_option("--graph", graph_, "Graph for claw-free: complete | path | cycle");
    cmd->add_option("--out", out_path_, "Output file");
    cmd->callback([this] {
      action_ = [this] {
        const auto p = build_protocol(name_, n_, graph_or("complete"));
        emit(to_text(p.tree), out_path_, out_);
        err_ << "height " << complexity(p.tree) << ", leaves " << p.tree.root()->leaf_count()
             << '\n';
      };
    });
  }

  void add_convert(CLI::App& app) {
    auto* cmd = app.add_subcommand("convert", "Protocol <-> nonnegative factorization");
    auto* named = cmd->add_option("--protocol", name_, "Catalog protocol to factor")
                      ->check(CLI::IsMember(kProtocols));
    auto* file = cmd->add_option("--input", in_path_, "Protocol text file to factor");
    auto* fact = cmd->add_option("--factorization", fact_path_,
                                 "Factorization file to turn into a one-way protocol");
    named->excludes(file)->excludes(fact);
    file->excludes(fact);
    cmd->add_option("--n", n_, "Vertex count for --protocol");
    cmd->add_option("--graph", graph_, "Graph for claw-free");
    cmd->add_option("--out", out_path_, "Output file");
    cmd->callback([this] {
      action_ = [this] {
        if (!fact_path_.empty()) {
          auto in = open_input(fact_path_);
          const Factorization f = read_factorization(in);
          const ProtocolTree t = factorization_to_protocol(f);
          const LabeledMatrix m(f.left().row_labels(), f.right().col_labels(), f.product());
          const auto check = computes_in_expectation(t, m);
          if (!check.ok) {
            throw VerificationError(mismatch_text(*check.first_mismatch));
          }
          emit(to_text(t), out_path_, out_);
          return;
        }
        std::optional<NamedProtocol> p;
        if (!name_.empty()) {
          if (n_ <= 0) {
            throw UsageError("--protocol needs --n");
          }
          p = build_protocol(name_, n_, graph_or("complete"));
        } else if (!in_path_.empty()) {
          auto in = open_input(in_path_);
          p = NamedProtocol{read_protocol(in), std::nullopt};
        } else {
          throw UsageError("convert needs --protocol, --input or --factorization");
        }
        const Factorization f = protocol_to_factorization(p->tree);
        if (p->target && !verify_factorization(*p->target, f)) {
          throw VerificationError("FAIL: factorization does not reproduce the slack matrix");
        }
        emit(to_text(f), out_path_, out_);
      };
    });
  }

  void add_cover(CLI::App& app) {
    auto* cmd = app.add_subcommand("cover", "Greedy compatible-bipartition cover of PM(K_n)");
    cmd->add_option("--n", n_, "Even vertex count, 4..10")->required();
    cmd->add_option("--out", out_path_, "Output file");
    cmd->callback([this] {
      action_ = [this] {
        const CoverFamily cover = greedy_matching_cover(n_);
        std::ostringstream text;
        for (const auto& x : cover.subsets) {
          text << make_label("X", x) << '\n';
        }
        std::size_t covered = 0;
        const auto matchings = enumerate_perfect_matchings(Graph::complete(n_));
        for (const auto& m : matchings) {
          covered += first_compatible(cover, m).has_value() ? 1 : 0;
        }
        text << "size " << cover.subsets.size() << ", covers " << covered << "/"
             << matchings.size() << " matchings, bound " << std::fixed << std::setprecision(3)
             << matching_cover_bound(n_) << '\n';
        emit(text.str(), out_path_, out_);
        if (covered != matchings.size()) {
          throw VerificationError("FAIL: cover misses a matching");
        }
      };
    });
  }

  void add_extend(CLI::App& app) {
    auto* cmd = app.add_subcommand("extend", "Build and check the extension from a protocol");
    cmd->add_option("--family", family_, "spanning-tree | perfect-matching | stable-set")
        ->required()
        ->check(CLI::IsMember(keys(kFamilies)));
    cmd->add_option("--n", n_, "Vertex count")->required();
    cmd->add_option("--graph", graph_, "Graph for stable-set");
    cmd->add_option("--out", out_path_, "Output file");
    cmd->callback([this] {
      action_ = [this] {
        const PolytopeFamily family = kFamilies.at(family_);
        const Graph g = family == PolytopeFamily::stable_set ? make_graph(graph_or("path"), n_)
                                                             : Graph::complete(n_);
        const PolytopeDescription p = polytope_description(family, g);
        const Factorization f = protocol_to_factorization(full_slack_protocol(family, n_, g));
        const ExtensionSystem q = build_extension(p, f);
        const ProjectionReport report = verify_projection(q, p, f);
        emit(to_text(q), out_path_, out_);
        if (!report.ok) {
          const auto& bad = *report.failure;
          throw VerificationError("FAIL: " + bad.stage + " row " + bad.row + " at " + bad.point +
                                  ": " + bad.message);
        }
        err_ << "extension: " << q.constraint_labels.size() << " constraints, d = "
             << q.coordinates.size() << ", r = " << q.size() << " (factorization rank "
             << f.rank() << "), " << report.vertices_lifted << " vertices lifted, "
             << report.points_sampled << " points sampled, bounded "
             << (check_bounded(strip_zero_columns(f)) ? "yes" : "no") << '\n';
      };
    });
  }

  void add_reduce(CLI::App& app) {
    auto* cmd = app.add_subcommand("reduce", "Disjointness reduction to a slack entry");
    cmd->add_option("--target", target_, "pm | st")->required()->check(CLI::IsMember({"pm", "st"}));
    cmd->add_option("--n", n_, "Ground set size")->required();
    cmd->add_option("--A", a_text_, "Alice's set, comma separated");
    cmd->add_option("--B", b_text_, "Bob's set, comma separated");
    cmd->add_option("--out", out_path_, "Output file");
    cmd->callback([this] {
      action_ = [this] {
        const DisjointnessInstance inst{n_, parse_set(a_text_), parse_set(b_text_)};
        if (!inst.a.within(n_) || !inst.b.within(n_)) {
          throw UsageError("A and B must be subsets of [n]");
        }
        std::ostringstream text;
        long slack = 0;
        if (target_ == "pm") {
          const auto r = reduce_to_pm(inst);
          slack = reduction_slack(r);
          text << "ell = " << r.ell << "\nk = " << r.k << "\nU = " << braces(r.u)
               << "\nM = " << braces(r.m) << '\n';
        } else {
          const auto r = reduce_to_st(inst);
          slack = reduction_slack(r);
          text << "ell = " << r.ell << "\nU = " << braces(r.u) << "\nT = " << braces(r.t) << '\n';
        }
        const int d = disj(inst);
        text << "slack = " << slack << "\nDISJ = " << d << '\n';
        emit(text.str(), out_path_, out_);
        if ((d == 1) != (slack == 0)) {
          throw VerificationError("FAIL: DISJ and slack disagree");
        }
      };
    });
  }

  void add_verify(CLI::App& app) {
    auto* cmd = app.add_subcommand("verify", "Exhaustive exact checks");
    auto* named = cmd->add_option("--protocol", name_, "Catalog protocol to check")
                      ->check(CLI::IsMember(kProtocols));
    auto* reduction = cmd->add_option("--reduction", target_, "pm | st")
                          ->check(CLI::IsMember({"pm", "st"}));
    auto* file = cmd->add_option("--protocol-file", in_path_, "Protocol text file");
    cmd->add_option("--matrix", matrix_path_, "CSV matrix for --protocol-file")->needs(file);
    named->excludes(reduction)->excludes(file);
    reduction->excludes(file);
    cmd->add_option("--n", n_, "Vertex count or ground set size");
    cmd->add_option("--graph", graph_, "Graph for claw-free");
    cmd->add_flag("--negative-control", negative_control_,
                  "Drop the anchor vertex from U; the check must then fail");
    cmd->add_option("--simulate", samples_, "Also run N Monte-Carlo samples per pair");
    cmd->add_option("--seed", seed_, "Seed for --simulate");
    cmd->callback([this] {
      action_ = [this] {
        if (!target_.empty()) {
          verify_reduction_action();
        } else if (!name_.empty()) {
          if (n_ <= 0) {
            throw UsageError("--protocol needs --n");
          }
          const auto p = build_protocol(name_, n_, graph_or("complete"));
          report_check(check_named(p, n_), p.target ? "pairs" : "consistent triples");
          if (samples_ > 0 && p.target) {
            simulate_all(p.tree, *p.target);
          }
        } else if (!in_path_.empty()) {
          if (matrix_path_.empty()) {
            throw UsageError("--protocol-file needs --matrix");
          }
          auto in = open_input(in_path_);
          const ProtocolTree t = read_protocol(in);
          const LabeledMatrix m = read_csv_file(matrix_path_);
          if (const auto bad = validate(t); !bad.empty()) {
            throw VerificationError("FAIL: invalid protocol at " + bad.front().path + ": " +
                                    bad.front().message);
          }
          report_check(computes_in_expectation(t, m), "pairs");
          if (samples_ > 0) {
            simulate_all(t, m);
          }
        } else {
          throw UsageError("verify needs --protocol, --reduction or --protocol-file");
        }
      };
    });
  }

  void verify_reduction_action() {
    if (n_ < 0) {
      throw UsageError("--reduction needs --n");
    }
    const auto target = target_ == "pm" ? ReductionTarget::pm : ReductionTarget::st;
    const ReductionCheck check = verify_reduction(target, n_, negative_control_);
    if (negative_control_) {
      if (check.ok) {
        throw VerificationError("FAIL: negative control was not falsified in " +
                                std::to_string(check.pairs_checked) + " pairs");
      }
      const auto& c = *check.counterexample;
      out_ << "OK: negative control falsified at A = " << braces(c.a) << ", B = " << braces(c.b)
           << " (DISJ = " << c.disj << ", slack = " << c.slack << ")\n";
      return;
    }
    if (!check.ok) {
      const auto& c = *check.counterexample;
      throw VerificationError("FAIL: A = " + braces(c.a) + ", B = " + braces(c.b) +
                              " gives DISJ = " + std::to_string(c.disj) +
                              " but slack = " + std::to_string(c.slack));
    }
    out_ << "OK: " << check.pairs_checked << "/" << check.pairs_checked << " pairs equivalent\n";
  }

  void report_check(const ExpectationCheck& check, const std::string& unit) {
    if (!check.ok) {
      throw VerificationError(mismatch_text(*check.first_mismatch));
    }
    out_ << "OK: " << check.pairs_checked << "/" << check.pairs_checked << " " << unit
         << " exact\n";
  }

  // Reports the largest deviation in standard errors; more than 6 fails.
  void simulate_all(const ProtocolTree& t, const LabeledMatrix& m) {
    double worst = 0.0;
    std::uint64_t seed = seed_;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const auto r = simulate(t, t.x_index(m.row_labels()[i]), t.y_index(m.col_labels()[j]),
                                samples_, seed++);
        const double exact = m(i, j).convert_to<double>();
        const double gap = std::abs(r.mean - exact);
        const double z = r.standard_error > 0 ? gap / r.standard_error
                                              : (gap > 1e-12 ? INFINITY : 0.0);
        worst = std::max(worst, z);
      }
    }
    out_ << "simulate: " << samples_ << " samples per pair, seed " << seed_
         << ", worst deviation " << std::fixed << std::setprecision(2) << worst << " SE\n";
    if (worst > 6.0) {
      throw VerificationError("FAIL: simulation deviates by more than 6 standard errors");
    }
  }

  std::string graph_or(const std::string& fallback) const {
    return graph_.empty() ? fallback : graph_;
  }

  template <typename Map>
  static std::vector<std::string> keys(const Map& m) {
    std::vector<std::string> out;
    for (const auto& [k, v] : m) {
      out.push_back(k);
    }
    return out;
  }

  std::ostream& out_;
  std::ostream& err_;
  std::function<void()> action_;

  std::string family_;
  std::string name_;
  std::string graph_;
  std::string target_;
  std::string a_text_;
  std::string b_text_;
  std::string out_path_;
  std::string in_path_;
  std::string fact_path_;
  std::string matrix_path_;
  int n_ = 0;
  bool full_ = false;
  bool support_ = false;
  bool negative_control_ = false;
  std::size_t samples_ = 0;
  std::uint64_t seed_ = 0;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner runner(out, err);
  return runner.run(args);
}

}  // namespace slackcomm::cli
