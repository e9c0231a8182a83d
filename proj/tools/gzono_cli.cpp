// gzono: face vectors of graphical zonotopes, quadrilateral flips, n-gon tables.
//
// Exit codes:
//   0  success
//   1  usage error or internal failure
//   2  graph file parse error
//   3  graph is disconnected
//   4  enumeration cap exceeded (see --unsafe-caps)
//   5  a built-in cross-check failed

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>

#include "gzono/flip.hpp"
#include "gzono/graph.hpp"
#include "gzono/ngon.hpp"
#include "gzono/orientation.hpp"
#include "gzono/report.hpp"

namespace {

using nlohmann::json;
using namespace gzono;

enum ExitCode { kOk = 0, kUsage = 1, kParse = 2, kDisconnected = 3, kCap = 4, kCheckFailed = 5 };

struct RunConfig {
  std::string format = "json";
  unsigned threads = 1;
  int max_depth = 8;
  std::uint64_t seed = 1;
  bool unsafe_caps = false;
  std::vector<std::string> paths;
  int n = 8;
  std::string mode = "formula";
  int k = 2;
  int count = 1;

  EnumOptions options() const {
    EnumOptions o;
    o.caps = unsafe_caps ? Caps::unsafe() : Caps{};
    o.threads = threads;
    return o;
  }
};

class DisconnectedGraph : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Graph load_connected(const std::string& path) {
  Graph g = read_graph_file(path);
  if (!connected(g)) throw DisconnectedGraph(path + ": graph is disconnected");
  return g;
}

void print_json(const json& j) { std::cout << j.dump() << '\n'; }

int cmd_facevector(const RunConfig& cfg) {
  const Graph g = load_connected(cfg.paths.at(0));
  const FaceVector f = face_vector(g, cfg.options());
  const BigInt acyclic = count_acyclic_orientations(g);
  const bool agrees = f[0] == acyclic;
  if (cfg.format == "csv") {
    std::cout << face_vector_csv(f);
  } else if (cfg.format == "text") {
    std::cout << "face vector " << f.to_string() << '\n'
              << "total " << f.total() << '\n'
              << "acyclic orientations " << acyclic << (agrees ? " (matches f0)" : " (MISMATCH)") << '\n';
  } else {
    print_json({{"graph", to_json(g)},
                {"face_vector", to_json(f)},
                {"total", to_json(f.total())},
                {"acyclic_orientations", to_json(acyclic)},
                {"f0_matches_acyclic", agrees}});
  }
  return agrees ? kOk : kCheckFailed;
}

int cmd_flips(const RunConfig& cfg) {
  const Graph g = load_connected(cfg.paths.at(0));
  const auto quads = find_flip_quads(g);
  const FaceVector f = face_vector(g, cfg.options());

  bool all_ok = true;
  json quad_list = json::array();
  json flipped_vectors = json::array();
  std::ostringstream text;
  text << "face vector " << f.to_string() << '\n' << quads.size() << " flip site(s)\n";
  for (const auto& q : quads) {
    const auto report = verify_flip_theorem(g, q, cfg.options());
    all_ok = all_ok && report.ok();
    json entry = to_json(q);
    entry["graph_after"] = to_json(apply_flip(g, q));
    entry["face_vector_after"] = to_json(report.after);
    entry["checks"] = {{"face_vectors_equal", report.face_vectors_equal},
                       {"injective", report.injective},
                       {"rank_preserving", report.rank_preserving},
                       {"image_is_covector_set", report.image_is_covector_set},
                       {"inverse_is_identity", report.inverse_is_identity}};
    quad_list.push_back(entry);
    flipped_vectors.push_back(to_json(report.after));
    text << q.to_string() << " -> " << report.after.to_string() << (report.ok() ? " ok" : " FAILED") << '\n';
  }

  if (cfg.format == "text") {
    std::cout << text.str();
  } else if (cfg.format == "csv") {
    std::cout << "v1,v2,v3,v4,ok\n";
    for (std::size_t k = 0; k < quads.size(); ++k) {
      const auto& t = quad_list[k]["quad"];
      std::cout << t[0] << ',' << t[1] << ',' << t[2] << ',' << t[3] << ','
                << (quad_list[k]["checks"]["face_vectors_equal"].get<bool>() ? 1 : 0) << '\n';
    }
  } else {
    print_json({{"graph", to_json(g)},
                {"quads", quad_list},
                {"face_vector", to_json(f)},
                {"flipped_face_vectors", flipped_vectors}});
  }
  return all_ok ? kOk : kCheckFailed;
}

int cmd_equiv(const RunConfig& cfg) {
  const Graph a = load_connected(cfg.paths.at(0));
  const Graph b = load_connected(cfg.paths.at(1));
  const auto path = flip_equivalence_search(a, b, cfg.max_depth);
  if (cfg.format == "json") {
    if (path)
      print_json({{"result", "found"}, {"length", path->steps.size()}, {"path", to_json(*path)}});
    else
      print_json({{"result", "not-found"}, {"max_depth", cfg.max_depth}});
    return kOk;
  }
  if (!path) {
    std::cout << "not-found\n";
    return kOk;
  }
  if (cfg.format == "csv") std::cout << "v1,v2,v3,v4\n";
  for (const auto& q : path->steps) {
    if (cfg.format == "csv")
      std::cout << q.v[0] + 1 << ',' << q.v[1] + 1 << ',' << q.v[2] + 1 << ',' << q.v[3] + 1 << '\n';
    else
      std::cout << q.to_string() << '\n';
  }
  if (cfg.format == "text") std::cout << "found " << path->steps.size() << " flip(s)\n";
  return kOk;
}

FaceVector brute_ngon(int n, const EnumOptions& opts) {
  return n == 2 ? face_vector(Graph::from_labels(2, {{1, 2}}), opts) : face_vector(fan_triangulation(n), opts);
}

int cmd_ngon(const RunConfig& cfg) {
  if (cfg.n < 2) throw CLI::ValidationError("--n", "must be at least 2");
  if (cfg.mode == "formula" || cfg.mode == "brute") {
    const FaceVector f = cfg.mode == "formula" ? face_vector_formula(cfg.n) : brute_ngon(cfg.n, cfg.options());
    if (cfg.format == "csv")
      std::cout << face_vector_csv(f);
    else if (cfg.format == "text")
      std::cout << f.to_string() << '\n';
    else
      print_json({{"n", cfg.n}, {"mode", cfg.mode}, {"face_vector", to_json(f)}, {"total", to_json(f.total())}});
    return kOk;
  }
  if (cfg.mode == "table") {
    if (cfg.format == "text") {
      std::cout << ngon_table_text(cfg.n);
    } else if (cfg.format == "csv") {
      std::cout << ngon_table_csv(cfg.n);
    } else {
      json rows = json::array();
      for (int n = 2; n <= cfg.n; ++n) {
        const auto f = face_vector_formula(n);
        rows.push_back({{"n", n}, {"face_vector", to_json(f)}, {"total", to_json(f.total())}});
      }
      print_json({{"rows", rows}});
    }
    return kOk;
  }
  // totals
  bool agree = true;
  json rows = json::array();
  if (cfg.format == "csv") std::cout << "n,total\n";
  for (int n = 2; n <= cfg.n; ++n) {
    const BigInt by_matrix = total_faces_matrix(n - 2);
    agree = agree && by_matrix == total_faces_recurrence(n - 2) && by_matrix == total_faces_closed_sum(n - 2);
    if (cfg.format == "csv")
      std::cout << n << ',' << by_matrix << '\n';
    else if (cfg.format == "text")
      std::cout << n << ' ' << by_matrix << '\n';
    rows.push_back({{"n", n}, {"total", to_json(by_matrix)}});
  }
  if (cfg.format == "json") print_json({{"totals", rows}, {"methods_agree", agree}});
  return agree ? kOk : kCheckFailed;
}

int cmd_corpus(const RunConfig& cfg) {
  const auto graphs = tree_shape_corpus(cfg.k, cfg.seed, cfg.count);
  if (cfg.format == "json") {
    json list = json::array();
    for (const auto& g : graphs) {
      json entry = to_json(g);
      entry["flip_sites"] = find_flip_quads(g).size();
      list.push_back(entry);
    }
    print_json(list);
    return kOk;
  }
  for (std::size_t c = 0; c < graphs.size(); ++c) {
    std::cout << "# corpus k=" << cfg.k << " seed=" << cfg.seed << " index=" << c << '\n';
    write_graph(std::cout, graphs[c]);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Face vectors of graphical zonotopes and quadrilateral flips"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--threads", cfg.threads, "Worker threads for covector enumeration")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  app.add_option("--max-depth", cfg.max_depth, "Flip search depth for equiv")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for corpus generation")->capture_default_str();
  app.add_flag("--unsafe-caps", cfg.unsafe_caps, "Lift the default enumeration caps");

  auto* facevector = app.add_subcommand("facevector", "Face vector of Z_G by covector enumeration");
  facevector->add_option("graph", cfg.paths, "Graph file")->required()->expected(1);

  auto* flips = app.add_subcommand("flips", "List flip sites and verify each flip");
  flips->add_option("graph", cfg.paths, "Graph file")->required()->expected(1);

  auto* equiv = app.add_subcommand("equiv", "Search for a flip sequence between two graphs");
  equiv->add_option("graphs", cfg.paths, "Two graph files")->required()->expected(2);

  auto* ngon = app.add_subcommand("ngon", "Face vectors of n-gon triangulations");
  ngon->add_option("--n", cfg.n, "Polygon size (largest n for table/totals)")->capture_default_str();
  ngon->add_option("--mode", cfg.mode, "formula, brute, table or totals")
      ->check(CLI::IsMember({"formula", "brute", "table", "totals"}))
      ->capture_default_str();

  auto* corpus = app.add_subcommand("corpus", "Emit tree-shaped quad-block graphs");
  corpus->add_option("--k", cfg.k, "Blocks per graph (1..6)")->check(CLI::Range(1, 6))->capture_default_str();
  corpus->add_option("--count", cfg.count, "Number of graphs")->check(CLI::PositiveNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*facevector) return cmd_facevector(cfg);
    if (*flips) return cmd_flips(cfg);
    if (*equiv) return cmd_equiv(cfg);
    if (*ngon) return cmd_ngon(cfg);
    if (*corpus) return cmd_corpus(cfg);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const DisconnectedGraph& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDisconnected;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << " (use --unsafe-caps to lift)\n";
    return kCap;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
