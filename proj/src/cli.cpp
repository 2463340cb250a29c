#include "packinglab/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "packinglab/arithmetic.hpp"
#include "packinglab/coxeter.hpp"
#include "packinglab/error.hpp"
#include "packinglab/fixtures.hpp"
#include "packinglab/geometrize.hpp"
#include "packinglab/io.hpp"
#include "packinglab/localglobal.hpp"
#include "packinglab/orbit.hpp"
#include "packinglab/render.hpp"
#include "packinglab/structure.hpp"

namespace packinglab::cli {

namespace {

std::string index_set(const std::vector<std::size_t>& idx) {
  std::string s = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(idx[i] + 1);
  }
  return s + "}";
}

std::string join_bends(const std::vector<QuadExt>& bends) {
  std::string s;
  for (std::size_t i = 0; i < bends.size(); ++i) {
    if (i) s += ",";
    s += bends[i].str();
  }
  return s;
}

void print_gram(const GramMatrix& g, std::ostream& out) {
  std::vector<std::vector<std::string>> cells(g.size(), std::vector<std::string>(g.size()));
  std::size_t width = 1;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) {
      const auto& e = g.at(i, j);
      cells[i][j] = e ? e->str() : "?";
      width = std::max(width, cells[i][j].size());
    }
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ' ';
      out << std::string(width - row[j].size(), ' ') << row[j];
    }
    out << '\n';
  }
}

io::SystemFile load_system(const std::string& path) {
  return io::system_from_json(io::parse_json(io::read_file(path)));
}

io::PackingFile load_packing(const std::string& path) {
  return io::packing_from_json(io::parse_json(io::read_file(path)));
}

std::string fmt_ld(long double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3Le", x);
  return buf;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toolkit for crystallographic circle and sphere packings", "packinglab"};
  app.require_subcommand(1);
  std::function<void()> action;

  std::string input;

  auto* parse_cmd = app.add_subcommand("parse", "Compile a .cox diagram to its Gram matrix");
  bool parse_json_out = false;
  parse_cmd->add_option("file", input, "Coxeter diagram (.cox)")->required();
  parse_cmd->add_flag("--json", parse_json_out, "Print gram.json instead of a table");
  parse_cmd->callback([&] {
    action = [&] {
      const auto g = gram_from_diagram(parse_diagram(io::read_file(input)));
      if (parse_json_out) {
        out << io::dump(io::gram_to_json(g));
      } else {
        print_gram(g, out);
      }
    };
  });

  auto* decompose_cmd =
      app.add_subcommand("decompose", "List cluster/cocluster decompositions of a wall set");
  decompose_cmd->add_option("file", input, "Diagram, gram.json or wall system")->required();
  decompose_cmd->callback([&] {
    action = [&] {
      const auto ds = enumerate_decompositions(io::load_gram(input));
      if (ds.empty()) out << "no decomposition found for this presentation\n";
      for (const auto& d : ds)
        out << "C=" << index_set(d.cluster) << " Chat=" << index_set(d.cocluster) << '\n';
    };
  });

  auto* orbit_cmd = app.add_subcommand("orbit", "Enumerate a packing or superpacking");
  std::string bound_text;
  std::size_t max_word = 100;
  bool super = false;
  std::string out_path = "packing.json";
  OrbitOptions orbit_opts;
  orbit_cmd->add_option("system", input, "Wall system (.json)")->required();
  orbit_cmd->add_option("--bound", bound_text, "Largest |bend| kept (exact number)")->required();
  orbit_cmd->add_option("--max-word", max_word, "Word-length cap")->capture_default_str();
  orbit_cmd->add_flag("--super", super, "Reflect in cluster walls too");
  orbit_cmd->add_option("--out", out_path, "Output packing.json")->capture_default_str();
  orbit_cmd->add_option("--frontier-cap", orbit_opts.frontier_cap, "Largest frontier allowed")
      ->capture_default_str();
  orbit_cmd->add_option("--jobs", orbit_opts.jobs, "Worker threads")->capture_default_str();
  orbit_cmd->callback([&] {
    action = [&] {
      const auto sys = load_system(input);
      const QuadExt bound = QuadExt::parse(bound_text);
      io::PackingFile pf;
      pf.packing = super ? generate_superpacking(sys.system, bound, max_word, orbit_opts)
                         : generate_packing(sys.system, bound, max_word, orbit_opts);
      pf.super = super;
      pf.bound = bound.str();
      pf.max_word = max_word;
      pf.system = sys.system;
      io::write_file(out_path, io::dump(io::packing_to_json(pf)));
      out << "count: " << pf.packing.spheres.size() << '\n';
      out << "saturated: " << (pf.packing.saturated ? "true" : "false") << '\n';
      out << "bends: " << join_bends(bends_list(pf.packing)) << '\n';
    };
  });

  auto* certify_cmd = app.add_subcommand("certify", "Check that every bend is an integer");
  certify_cmd->add_option("packing", input, "packing.json")->required();
  certify_cmd->callback([&] {
    action = [&] {
      const auto pf = load_packing(input);
      const auto rep = certify_integral(pf.packing);
      out << "integral: " << (rep.integral ? "true" : "false") << '\n';
      for (const auto& w : rep.witnesses)
        out << "witness: sphere " << w.index + 1 << " bend " << w.bend.str() << " word_length "
            << w.word_length << '\n';
    };
  });

  auto* arith_cmd = app.add_subcommand("arith", "Dual form and cyclic-product test");
  std::size_t max_len = 8;
  arith_cmd->add_option("file", input, "gram.json, diagram or wall system")->required();
  arith_cmd->add_option("--max-len", max_len, "Longest cycle tested")->capture_default_str();
  arith_cmd->callback([&] {
    action = [&] {
      const auto g = io::load_gram(input);
      const auto v = vinberg_test(g, max_len);
      if (v.non_arithmetic) {
        std::vector<std::size_t> w = v.witness;
        out << "NonArithmetic witness=(";
        for (std::size_t i = 0; i < w.size(); ++i) out << (i ? "," : "") << w[i] + 1;
        out << ") product=" << v.product.str() << '\n';
      } else {
        out << "PassesUpTo " << v.max_len << " (" << v.cycles_checked << " cycles)\n";
      }
      if (!g.has_placeholders()) {
        try {
          const auto f = dual_form(g);
          out << "dual form: " << (is_rational_matrix(f) ? "rational" : "irrational") << '\n';
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::SingularGram) throw;
          out << "dual form: singular\n";
        }
      }
    };
  });

  auto* geo_cmd = app.add_subcommand("geometrize", "Realize a target spec and verify it exactly");
  unsigned long field_d = 0;
  double tol = 1e-12;
  unsigned long denom = 64;
  std::uint64_t seed = 1;
  double guess_tol = 1e-8;
  std::size_t starts = 64;
  std::string geo_out = "system.json";
  geo_cmd->add_option("target", input, "target.json")->required();
  geo_cmd->add_option("--d", field_d, "Guess in Q(sqrt(d)); 0 for Q")->capture_default_str();
  geo_cmd->add_option("--tol", tol, "Solver residual tolerance")->capture_default_str();
  geo_cmd->add_option("--denom", denom, "Largest denominator guessed")->capture_default_str();
  geo_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
  geo_cmd->add_option("--guess-tol", guess_tol, "Guess tolerance")->capture_default_str();
  geo_cmd->add_option("--starts", starts, "Random starts")->capture_default_str();
  geo_cmd->add_option("--out", geo_out, "Output system.json")->capture_default_str();
  geo_cmd->callback([&] {
    action = [&] {
      const auto t = io::target_from_json(io::parse_json(io::read_file(input)));
      RealizeOptions ro;
      ro.starts = starts;
      const auto fw = realize(t, seed, tol, ro);
      out << "residual: " << fmt_ld(fw.residual) << " after " << fw.iterations
          << " iterations (start " << fw.start + 1 << ")\n";
      io::SystemFile sys;
      sys.name = "geometrized";
      sys.provenance = "geometrize " + input;
      sys.system = guess_walls(fw, t, field_d, denom, guess_tol);
      const auto rep = verify_realization(sys.system, t);
      if (!rep.ok) {
        std::string msg = "guessed walls fail exact verification:";
        for (const auto& m : rep.mismatches)
          msg += " (" + std::to_string(m.i + 1) + "," + std::to_string(m.j + 1) + ") expected " +
                 m.expected + " got " + m.actual + ";";
        throw Error(ErrorKind::NoCandidate, msg);
      }
      if (!sys.system.cluster.empty() || !sys.system.cocluster.empty()) {
        validate_system(sys.system);
      }
      io::write_file(geo_out, io::dump(io::system_to_json(sys)));
      out << "verified: " << t.targets.size() << " products exact\n";
    };
  });

  auto* render_cmd = app.add_subcommand("render", "Draw a planar packing as SVG");
  std::string svg_out = "fig.svg";
  bool labels = false;
  std::vector<double> center{0, 0};
  Viewport vp;
  render_cmd->add_option("packing", input, "packing.json")->required();
  render_cmd->add_option("--out", svg_out, "Output SVG")->capture_default_str();
  render_cmd->add_flag("--labels", labels, "Label circles with their bends");
  render_cmd->add_option("--center", center, "Viewport center x y")->expected(2);
  render_cmd->add_option("--half-width", vp.half_width, "Half the viewport width")
      ->capture_default_str();
  render_cmd->add_option("--size", vp.size_px, "Image size in pixels")->capture_default_str();
  render_cmd->add_option("--min-radius", vp.min_radius_px, "Smallest pixel radius drawn")
      ->capture_default_str();
  render_cmd->callback([&] {
    action = [&] {
      vp.cx = center.at(0);
      vp.cy = center.at(1);
      const auto pf = load_packing(input);
      io::write_file(svg_out, render_svg(pf.packing, vp, labels));
      out << "wrote " << svg_out << '\n';
    };
  });

  auto* lg_cmd = app.add_subcommand("lg-scan", "Residue classes and missing bends");
  long modulus = 24;
  long lg_bound = 0;
  lg_cmd->add_option("packing", input, "packing.json with its wall system")->required();
  lg_cmd->add_option("--mod", modulus, "Modulus")->capture_default_str();
  lg_cmd->add_option("--bound", lg_bound, "Scan bends up to this value")->required();
  lg_cmd->callback([&] {
    action = [&] {
      const auto pf = load_packing(input);
      const auto& ws = pf.system;
      const auto ro = residue_orbit(bends_group(ws), bends_vector(ws.cluster_walls()), modulus);
      std::vector<long> bends;
      for (const auto& b : bends_list(pf.packing)) {
        if (!b.is_rational_integer()) {
          throw Error(ErrorKind::NonIntegralInput, "bend " + b.str() + " is not an integer");
        }
        bends.push_back(b.rat_part().get_num().get_si());
      }
      out << "residues mod " << ro.modulus << ": ";
      for (std::size_t i = 0; i < ro.residues.size(); ++i) out << (i ? "," : "") << ro.residues[i];
      out << '\n';
      std::size_t bad = 0;
      for (long b : bends) bad += !ro.admits(b);
      out << "inadmissible bends: " << bad << '\n';
      const auto missing = missing_bends(bends, ro, lg_bound);
      out << "missing: ";
      for (std::size_t i = 0; i < missing.size(); ++i) out << (i ? "," : "") << missing[i];
      out << '\n';
    };
  });

  auto* fix_cmd = app.add_subcommand("fixtures", "List, show or export shipped fixtures");
  fix_cmd->require_subcommand(1);
  auto* fix_list = fix_cmd->add_subcommand("list", "List fixture files");
  fix_list->callback([&] {
    action = [&] {
      for (const auto& n : fixtures::names()) out << n << '\n';
    };
  });
  std::string fix_dir = "fixtures";
  auto* fix_export = fix_cmd->add_subcommand("export", "Write all fixtures to a directory");
  fix_export->add_option("--dir", fix_dir, "Target directory")->capture_default_str();
  fix_export->callback([&] {
    action = [&] {
      fixtures::export_all(fix_dir);
      out << "exported " << fixtures::names().size() << " files to " << fix_dir << '\n';
    };
  });
  std::string fix_name;
  auto* fix_show = fix_cmd->add_subcommand("show", "Print one fixture");
  fix_show->add_option("name", fix_name, "Fixture file name")->required();
  fix_show->callback([&] { action = [&] { out << fixtures::text(fix_name); }; });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (action) action();
    return 0;
  } catch (const Error& e) {
    err << nlohmann::json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump()
        << '\n';
  } catch (const nlohmann::json::exception& e) {
    err << nlohmann::json{{"error", "ParseError"}, {"message", e.what()}}.dump() << '\n';
  }
  return 1;
}

}  // namespace packinglab::cli
