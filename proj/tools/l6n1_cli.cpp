#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "l6n1/fixtures.hpp"
#include "l6n1/generator.hpp"
#include "l6n1/io.hpp"
#include "l6n1/link_invariants.hpp"
#include "l6n1/reduction.hpp"
#include "l6n1/resolver.hpp"

namespace {

constexpr int kOk = 0, kFail = 1, kUsage = 2;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  return l6n1::read_file(path);
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-")
    std::cout << content;
  else
    l6n1::write_file(path, content);
}

int cmd_check(const std::string& file) {
  l6n1::Projection p;
  try {
    p = l6n1::parse_projection(slurp(file));
  } catch (const l6n1::Error& e) {
    if (e.code() == l6n1::Errc::ParseError) throw;
    std::cout << "invalid: " << e.what() << "\n";
    return kFail;
  }
  const auto& m = p.map();
  auto tc = p.type_counts();
  std::cout << "valid projection: vertices=" << m.vertex_count() << " edges=" << m.edge_count()
            << " faces=" << m.face_count() << " components=" << m.component_count() << "\n";
  std::cout << "vertex types: BR=" << tc.br << " BG=" << tc.bg << " RG=" << tc.rg
            << " mono=" << tc.mono << "\n";
  bool pc = p.is_pairwise_crossing();
  std::cout << "pairwise crossing: " << (pc ? "yes" : "no") << "\n";
  if (!pc) {
    std::cout << "reason: not pairwise crossing\n";
    return kFail;
  }
  return kOk;
}

int cmd_reduce(const std::string& file, const std::string& trace_out) {
  l6n1::Projection p = l6n1::parse_projection(slurp(file));
  auto res = l6n1::reduce(p);
  auto cls = l6n1::classify_irreducible(res.reduced);
  std::cout << "# class " << l6n1::irreducible_class_name(cls.cls) << "\n";
  std::cout << "# steps " << res.trace.steps.size() << "\n";
  std::cout << l6n1::serialize_projection(res.reduced);
  if (!trace_out.empty()) emit(trace_out, l6n1::serialize_trace(res.trace));
  return kOk;
}

int cmd_resolve(const std::string& file, const std::string& out) {
  l6n1::Projection p = l6n1::parse_projection(slurp(file));
  l6n1::Diagram d = l6n1::resolve_l6n1(p);
  auto verdict = l6n1::is_l6n1(d);
  if (!verdict.ok) {
    std::cout << "resolution failed verification: " << verdict.reason << "\n";
    return kFail;
  }
  emit(out, l6n1::serialize_diagram(d));
  return kOk;
}

int cmd_verify(const std::string& file, int max_crossings) {
  l6n1::Diagram d = l6n1::parse_diagram(slurp(file));
  auto verdict = l6n1::is_l6n1(d, max_crossings);
  std::cout << "components: " << verdict.components << "\n";
  std::cout << "abs linking profile:";
  for (int x : verdict.abs_lk) std::cout << " " << x;
  std::cout << "\n";
  if (verdict.profile_ok) std::cout << "jones: " << verdict.jones_value.str() << "\n";
  std::cout << "is_l6n1: " << (verdict.ok ? "yes" : "no") << "\n";
  if (!verdict.ok) {
    std::cout << "reason: " << verdict.reason << "\n";
    return kFail;
  }
  return kOk;
}

int cmd_invariants(const std::string& file, bool show_bracket, bool show_jones,
                   bool show_linking, bool as_t) {
  l6n1::Diagram d = l6n1::parse_diagram(slurp(file));
  bool all = !show_bracket && !show_jones && !show_linking;
  if (all || show_bracket) {
    auto b = l6n1::kauffman_bracket(d);
    std::cout << "bracket: " << b.str() << "\n";
  }
  if (all || show_jones) {
    auto j = l6n1::jones(d);
    std::cout << "jones: " << (as_t ? j.str_t() : j.str()) << "\n";
    std::cout << "writhe: " << l6n1::writhe(d) << "\n";
  }
  if (all || show_linking) {
    int nc = (int)d.projection.map().straight_walks().size();
    for (int i = 0; i < nc; i++)
      for (int j = i + 1; j < nc; j++)
        std::cout << "lk(" << i << "," << j << "): " << l6n1::linking_number(d, i, j) << "\n";
  }
  return kOk;
}

int cmd_enumerate(int vertices, bool pairwise, bool connected, bool count_only) {
  l6n1::EnumerationFilter f;
  f.vertices = vertices;
  f.pairwise_crossing_only = pairwise;
  f.connected_only = connected;
  long count = 0;
  l6n1::enumerate_projections(f, [&](const l6n1::Projection& p) {
    count++;
    if (!count_only) {
      std::cout << l6n1::serialize_projection(p) << "\n";
    }
  });
  if (count_only) std::cout << count << "\n";
  return kOk;
}

int cmd_random(int vertices, std::uint64_t seed) {
  std::cout << l6n1::serialize_projection(l6n1::random_projection(vertices, seed));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reduce, resolve and verify 3-component link shadows against L6n1"};
  app.require_subcommand(1);

  std::string file, out, trace_out;
  int max_crossings = -1;
  int vertices = 6;
  std::uint64_t seed = 0;
  bool pairwise = false, connected = false, count_only = false;
  bool show_bracket = false, show_jones = false, show_linking = false, as_t = false;

  auto* check = app.add_subcommand("check", "validate a projection and report pairwise crossing");
  check->add_option("file", file, "projection file, or - for stdin")->required();

  auto* reduce = app.add_subcommand("reduce", "reduce to an irreducible projection");
  reduce->add_option("file", file)->required();
  reduce->add_option("--trace", trace_out, "write the reduction trace here");

  auto* resolve = app.add_subcommand("resolve", "produce a verified L6n1 diagram");
  resolve->add_option("file", file)->required();
  resolve->add_option("-o,--output", out, "diagram output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "run the invariant verdict on a diagram");
  verify->add_option("file", file)->required();
  verify->add_option("--max-crossings", max_crossings, "state-sum cap override");

  auto* inv = app.add_subcommand("invariants", "print bracket/Jones/linking data");
  inv->add_option("file", file)->required();
  inv->add_flag("--bracket", show_bracket);
  inv->add_flag("--jones", show_jones);
  inv->add_flag("--linking", show_linking);
  inv->add_flag("--t-variable", as_t, "render Jones in t = A^-4");

  auto* enumer = app.add_subcommand("enumerate", "stream all projection classes of a size");
  enumer->add_option("--vertices", vertices)->required();
  enumer->add_flag("--pairwise-crossing", pairwise);
  enumer->add_flag("--connected", connected);
  enumer->add_flag("--count-only", count_only);

  auto* rnd = app.add_subcommand("random", "seeded pairwise crossing projection");
  rnd->add_option("--vertices", vertices)->required();
  rnd->add_option("--seed", seed)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(file);
    if (reduce->parsed()) return cmd_reduce(file, trace_out);
    if (resolve->parsed()) return cmd_resolve(file, out);
    if (verify->parsed()) return cmd_verify(file, max_crossings);
    if (inv->parsed()) return cmd_invariants(file, show_bracket, show_jones, show_linking, as_t);
    if (enumer->parsed()) return cmd_enumerate(vertices, pairwise, connected, count_only);
    if (rnd->parsed()) return cmd_random(vertices, seed);
  } catch (const l6n1::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == l6n1::Errc::ParseError || e.code() == l6n1::Errc::CapExceeded ? kUsage
                                                                                     : kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
