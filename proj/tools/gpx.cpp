#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gp/cayley.hpp"
#include "gp/error.hpp"
#include "gp/json_io.hpp"
#include "gp/series.hpp"
#include "gp/structure.hpp"
#include "gp/surface.hpp"
#include "gp/word_io.hpp"

using nlohmann::ordered_json;

namespace {

  struct Options {
    std::string  file;
    std::string  word;
    std::string  w1;
    std::string  w2;
    std::string  csv;
    int          radius       = 3;
    int          length_bound = 4;
    std::size_t  max_elements = gp::CayleyLimits{}.max_elements;
    std::size_t  geodesic_cap = gp::BigonOptions{}.geodesic_cap;
    unsigned     threads      = 1;
    std::uint64_t seed        = 0;
    int          n            = 0;
    bool         list         = false;
  };

  ordered_json name_list(gp::Presentation const& p, std::span<const gp::VertexId> vs) {
    ordered_json out = ordered_json::array();
    for (auto v : vs) {
      out.push_back(p.graph().name(v));
    }
    return out;
  }

  std::string show(gp::Presentation const& p, gp::NormalForm const& nf) {
    auto s = gp::format_normal_form(p, nf);
    return s.empty() ? "1" : s;
  }

  std::string show(gp::Presentation const& p, gp::LetterWord const& w) {
    auto s = gp::format_word(p, w);
    return s.empty() ? "1" : s;
  }

  gp::CayleyLimits limits(Options const& o) {
    gp::CayleyLimits l;
    l.max_elements = o.max_elements;
    return l;
  }

  ordered_json cmd_normalize(Options const& o) {
    auto p  = gp::load_presentation(o.file);
    auto e  = gp::parse_expression(p, o.word);
    auto nf = gp::normalize(p, e);
    ordered_json out;
    out["normal_form"]     = show(p, nf);
    out["syllables"]       = nf.size();
    out["geodesic_length"] = gp::geodesic_length(p, nf);
    return out;
  }

  ordered_json cmd_equal(Options const& o) {
    auto p = gp::load_presentation(o.file);
    auto a = gp::parse_expression(p, o.w1);
    auto b = gp::parse_expression(p, o.w2);
    ordered_json out;
    out["equal"] = gp::equal(p, a, b);
    return out;
  }

  ordered_json cmd_geodesic(Options const& o) {
    auto p = gp::load_presentation(o.file);
    auto w = gp::parse_letter_word(p, o.word);
    ordered_json out;
    out["input_length"] = w.size();
    out["is_geodesic"]  = gp::is_geodesic(p, w);
    std::size_t steps   = 0;
    while (!gp::is_geodesic(p, w)) {
      w = gp::shorten(p, w);
      ++steps;
    }
    out["steps"]    = steps;
    out["geodesic"] = show(p, w);
    out["length"]   = w.size();
    return out;
  }

  ordered_json cmd_hyperbolic(Options const& o) {
    auto p = gp::load_presentation(o.file);
    auto r = gp::decide_hyperbolic(p);
    auto const& g = p.graph();
    ordered_json out;
    out["verdict"]  = r.verdict;
    out["cond_i"]   = r.cond_i;
    out["cond_ii"]  = r.cond_ii;
    out["cond_iii"] = r.cond_iii;
    out["cond_iv"]  = r.cond_iv;
    ordered_json all = ordered_json::object();
    if (r.non_hyperbolic_vertex) {
      all["cond_i"] = ordered_json::array({g.name(*r.non_hyperbolic_vertex)});
    }
    if (r.adjacent_infinite_pair) {
      auto [u, v]    = *r.adjacent_infinite_pair;
      all["cond_ii"] = ordered_json::array({g.name(u), g.name(v)});
    }
    if (r.non_clique_link) {
      auto [v, pair]  = *r.non_clique_link;
      all["cond_iii"] = ordered_json::array(
          {g.name(v), g.name(pair.first), g.name(pair.second)});
    }
    if (r.induced_square) {
      all["cond_iv"] = name_list(p, *r.induced_square);
    }
    out["witness"]   = all.empty() ? ordered_json() : all.begin().value();
    out["witnesses"] = all;
    return out;
  }

  ordered_json cmd_free_kernel(Options const& o) {
    auto p = gp::load_presentation(o.file);
    auto r = gp::decide_kernel_free(p);
    ordered_json out;
    out["free"]    = r.free;
    out["witness"] = r.witness ? name_list(p, *r.witness) : ordered_json();
    out["genus_if_cycle"] =
        r.genus_if_cycle ? ordered_json(*r.genus_if_cycle) : ordered_json();
    return out;
  }

  ordered_json cmd_kernel_test(Options const& o) {
    auto p = gp::load_presentation(o.file);
    auto e = gp::parse_expression(p, o.word);
    ordered_json out;
    out["in_kernel"] = gp::in_kernel(p, e);
    auto proj        = gp::project_to_direct_product(p, e);
    ordered_json image = ordered_json::object();
    for (gp::VertexId v = 0; v < p.size(); ++v) {
      image[p.graph().name(v)] = p.group(v).element_name(proj[v]);
    }
    out["projection"] = image;
    return out;
  }

  ordered_json verification_json(gp::VerificationReport const& r) {
    ordered_json out;
    out["pass"]    = r.pass;
    out["checked"] = r.checked;
    out["counterexample"] =
        r.counterexample ? ordered_json(*r.counterexample) : ordered_json();
    return out;
  }

  ordered_json series_json(gp::Presentation const& p,
                           gp::SeriesReport const& s,
                           int                     radius,
                           bool                    with_elements,
                           bool&                   all_pass) {
    auto         checks = gp::verify_series(p, s, radius);
    ordered_json out;
    ordered_json coloring = ordered_json::object();
    for (gp::VertexId v = 0; v < p.size(); ++v) {
      coloring[p.graph().name(v)] = s.coloring.color[v];
    }
    out["coloring"]     = coloring;
    out["colors"]       = s.coloring.num_colors;
    out["length_bound"] = s.length_bound;
    out["radius"]       = radius;
    out["levels"]       = ordered_json::array();
    all_pass            = true;
    for (std::size_t i = 0; i < s.levels.size(); ++i) {
      auto const&  level = s.levels[i];
      ordered_json l;
      l["dead"]   = name_list(p, level.dead);
      l["living"] = name_list(p, level.living);
      l["factor"] = ordered_json::array();
      for (std::size_t j = 0; j < level.factor.size(); ++j) {
        auto const&  f = level.factor[j];
        auto const&  c = checks[i][j];
        ordered_json fj;
        fj["dead"]     = p.graph().name(f.dead);
        fj["count"]    = f.elements.size();
        fj["truncated"] = f.truncated;
        if (with_elements) {
          fj["elements"] = ordered_json::array();
          for (auto const& t : f.elements) {
            fj["elements"].push_back(show(p, t));
          }
        }
        fj["star"]           = verification_json(c.star);
        fj["prefix_closure"] = verification_json(c.prefix_closure);
        fj["action"]         = verification_json(c.action);
        all_pass = all_pass && c.star.pass && c.prefix_closure.pass && c.action.pass;
        l["factor"].push_back(fj);
      }
      out["levels"].push_back(l);
    }
    out["pass"] = all_pass;
    return out;
  }

  ordered_json cmd_series(Options const& o) {
    auto p = gp::load_presentation(o.file);
    auto s = gp::build_series(p, gp::chromatic_coloring(p.graph()), o.length_bound);
    bool pass = true;
    return series_json(p, s, o.radius, true, pass);
  }

  ordered_json cmd_verify_hs(Options const& o) {
    auto p = gp::load_presentation(o.file);
    auto s = gp::build_series(p, gp::chromatic_coloring(p.graph()), o.length_bound);
    bool pass = true;
    auto full = series_json(p, s, o.radius, false, pass);
    ordered_json out;
    out["pass"]   = pass;
    out["levels"] = full["levels"];
    return out;
  }

  ordered_json cmd_surface(Options const& o) {
    auto c     = gp::build_Y(o.n);
    auto check = gp::verify_closed_surface(c);
    auto f     = gp::surface_characteristics(o.n);
    ordered_json out;
    out["n"]      = o.n;
    out["counts"] = {{"vertices", c.vertex_count},
                     {"edges", c.edges.size()},
                     {"squares", c.squares.size()}};
    out["euler"]  = gp::euler_characteristic(c);
    out["genus"]  = check.closed_surface ? ordered_json(gp::genus_from_complex(c))
                                         : ordered_json();
    out["euler_formula"]  = f.euler;
    out["genus_formula"]  = f.genus;
    out["closed_surface"] = check.closed_surface;
    out["orientable"]     = gp::orientability(c);
    return out;
  }

  ordered_json cmd_ball(Options const& o) {
    auto p = gp::load_presentation(o.file);
    auto b = gp::ball(p, o.radius, limits(o));
    ordered_json out;
    out["radius"]       = b.radius;
    out["size"]         = b.size();
    out["sphere_sizes"] = b.sphere_sizes;
    if (o.list) {
      out["elements"] = ordered_json::array();
      for (std::size_t i = 0; i < b.size(); ++i) {
        out["elements"].push_back(
            {{"element", show(p, b.elements[i])}, {"distance", b.distance[i]}});
      }
    }
    return out;
  }

  ordered_json witness_json(gp::Presentation const& p, gp::BigonWitness const& w) {
    ordered_json out;
    out["case"]     = std::string(1, w.kind);
    out["endpoint"] = show(p, w.endpoint);
    out["first"]    = show(p, w.first);
    out["second"]   = show(p, w.second);
    out["width"]    = w.width;
    return out;
  }

  ordered_json cmd_bigon_scan(Options const& o) {
    auto p = gp::load_presentation(o.file);
    gp::BigonOptions opts;
    opts.limits       = limits(o);
    opts.geodesic_cap = o.geodesic_cap;
    opts.threads      = o.threads;
    auto r = gp::bigon_scan(p, o.radius, opts);
    ordered_json out;
    out["radius"]        = r.radius;
    out["ball_size"]     = r.ball_size;
    out["max_width"]     = r.max_width;
    out["case_a_width"]  = r.case_a_width;
    out["case_b_width"]  = r.case_b_width;
    out["case_b_excess"] = r.case_b_excess;
    out["witness"] = r.witness ? witness_json(p, *r.witness) : ordered_json();
    out["rows"]    = ordered_json::array();
    for (auto const& row : r.rows) {
      out["rows"].push_back({{"radius", row.radius},
                             {"case_a_width", row.case_a_width},
                             {"case_b_width", row.case_b_width},
                             {"case_a_pairs", row.case_a_pairs},
                             {"case_b_pairs", row.case_b_pairs}});
    }
    out["truncated"] = r.truncated;
    out["caveat"]    = r.caveat;
    if (!o.csv.empty()) {
      std::ofstream csv(o.csv);
      if (!csv) {
        throw gp::InputError("cannot write " + o.csv);
      }
      csv << "radius,max_width\n";
      for (auto const& row : r.rows) {
        csv << row.radius << ',' << std::max(row.case_a_width, row.case_b_width)
            << '\n';
      }
    }
    return out;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph products of groups: normal forms, decisions, scans"};
  app.require_subcommand(1);
  Options o;

  auto presentation = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "presentation JSON")->required();
  };
  auto sample_flags = [&](CLI::App* sub) {
    sub->add_option("--max-elements", o.max_elements, "ball size cap")
        ->capture_default_str();
    sub->add_option("--seed", o.seed,
                    "seed for sampled scans (current scans are exhaustive)")
        ->capture_default_str();
  };

  auto* normalize = app.add_subcommand("normalize", "canonical normal form of a word");
  presentation(normalize);
  normalize->add_option("--word", o.word, "word, e.g. \"a b^-1 a^2\"")->required();

  auto* equal = app.add_subcommand("equal", "decide whether two words are equal");
  presentation(equal);
  equal->add_option("--w1", o.w1, "first word")->required();
  equal->add_option("--w2", o.w2, "second word")->required();

  auto* geodesic = app.add_subcommand("geodesic", "shorten a word to a geodesic");
  presentation(geodesic);
  geodesic->add_option("--word", o.word, "word")->required();

  auto* hyperbolic = app.add_subcommand("hyperbolic", "decide hyperbolicity");
  presentation(hyperbolic);

  auto* free_kernel =
      app.add_subcommand("free-kernel", "decide freeness of the direct-product kernel");
  presentation(free_kernel);

  auto* kernel_test =
      app.add_subcommand("kernel-test", "test whether a word lies in the kernel");
  presentation(kernel_test);
  kernel_test->add_option("--word", o.word, "word")->required();

  auto* series = app.add_subcommand("series", "build and verify the chromatic series");
  presentation(series);
  series->add_option("--length-bound", o.length_bound, "T_d enumeration bound")
      ->capture_default_str();
  series->add_option("--radius", o.radius, "verification ball radius")
      ->capture_default_str();

  auto* verify_hs = app.add_subcommand("verify-hs", "verify the series construction");
  presentation(verify_hs);
  verify_hs->add_option("--length-bound", o.length_bound, "T_d enumeration bound")
      ->capture_default_str();
  verify_hs->add_option("--radius", o.radius, "verification ball radius")
      ->capture_default_str();

  auto* surface = app.add_subcommand("surface", "surface subcomplex for the n-cycle");
  surface->add_option("n", o.n, "cycle length, 3..20")->required();

  auto* ball = app.add_subcommand("ball", "Cayley graph ball");
  presentation(ball);
  ball->add_option("--radius", o.radius, "radius")->capture_default_str();
  ball->add_flag("--elements", o.list, "list elements");
  sample_flags(ball);

  auto* bigon = app.add_subcommand("bigon-scan", "scan geodesic bigons in a ball");
  presentation(bigon);
  bigon->add_option("--radius", o.radius, "radius")->capture_default_str();
  bigon->add_option("--threads", o.threads, "worker threads")
      ->capture_default_str()
      ->check(CLI::Range(1u, 256u));
  bigon->add_option("--geodesic-cap", o.geodesic_cap, "geodesics kept per endpoint")
      ->capture_default_str();
  bigon->add_option("--csv", o.csv, "also write radius,max_width rows to this file");
  sample_flags(bigon);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 2;
  }

  try {
    ordered_json out;
    auto*        sub = app.get_subcommands().front();
    std::string  cmd = sub->get_name();
    if (cmd == "normalize") {
      out = cmd_normalize(o);
    } else if (cmd == "equal") {
      out = cmd_equal(o);
    } else if (cmd == "geodesic") {
      out = cmd_geodesic(o);
    } else if (cmd == "hyperbolic") {
      out = cmd_hyperbolic(o);
    } else if (cmd == "free-kernel") {
      out = cmd_free_kernel(o);
    } else if (cmd == "kernel-test") {
      out = cmd_kernel_test(o);
    } else if (cmd == "series") {
      out = cmd_series(o);
    } else if (cmd == "verify-hs") {
      out = cmd_verify_hs(o);
    } else if (cmd == "surface") {
      out = cmd_surface(o);
    } else if (cmd == "ball") {
      out = cmd_ball(o);
    } else {
      out = cmd_bigon_scan(o);
    }
    std::cout << out.dump() << '\n';
    return 0;
  } catch (gp::InputError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (gp::ResourceError const& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 3;
  } catch (std::exception const& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
