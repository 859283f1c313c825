// Command-line front end.
//
// Exit status: 0 success, 2 parse error, 3 domain error, 4 verification
// failure.
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dmv/dmv.hpp"

namespace {

using namespace dmv;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitVerification = 4;

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename Reader>
auto read_file(const std::string& path, Reader reader) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  return reader(in);
}

Mask parse_mask_arg(const std::string& text) {
  if (text.size() < 3 || text.substr(0, 2) != "0x" ||
      text.find_first_not_of("0123456789abcdef", 2) != std::string::npos || text.size() > 10) {
    throw Error(ErrorKind::ParseError, "mask '" + text + "' must be 0x-prefixed lowercase hex");
  }
  return static_cast<Mask>(std::stoul(text.substr(2), nullptr, 16));
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string class_label(const CanonicalCode& c) {
  std::string out = "n=" + std::to_string(c.n) + " phi";
  for (Mask m : c.code) out += " " + detail::hex(m);
  return out;
}

struct Runner {
  std::function<void()> action;
};

void add_ss(CLI::App& app, Runner& run) {
  auto* ss = app.add_subcommand("ss", "Set-system predicates and transforms");
  ss->require_subcommand(1);

  static std::string file, file2, set_text;
  static int a = 0, b = 0, e = 0;
  static bool raw = false;
  static bool require_binary = false;

  auto emit = [](const SetSystem& s) {
    std::cout << format_set_system(raw ? s : canonical_form(s).to_system());
  };
  auto mode = [] { return require_binary ? Enforcement::RequireBinary : Enforcement::Off; };
  auto load = [] { return read_file(file, [](std::istream& in) { return read_set_system(in); }); };

  auto* check = ss->add_subcommand("check", "Print proper / delta-matroid / even / binary / empty-feasible");
  check->add_option("file", file, "Set-system file")->required();
  check->callback([&run, load] {
    run.action = [load] {
      const SetSystem s = load();
      std::cout << "proper " << yes_no(s.count() > 0) << "\n"
                << "delta-matroid " << yes_no(is_delta_matroid(s)) << "\n"
                << "even " << yes_no(is_even(s)) << "\n"
                << "binary " << yes_no(is_binary(s)) << "\n"
                << "empty-feasible " << yes_no(has_empty_feasible(s)) << "\n";
    };
  });

  auto with_raw = [](CLI::App* cmd) {
    cmd->add_flag("--raw", raw, "Keep the input labelling instead of printing the canonical form");
  };
  auto with_pair = [](CLI::App* cmd) {
    cmd->add_option("-a", a, "First element (0-based)")->required();
    cmd->add_option("-b", b, "Second element (0-based)")->required();
    cmd->add_flag("--require-binary", require_binary, "Reject inputs the binary recognizer does not accept");
  };

  auto* tw = ss->add_subcommand("twist", "Symmetric difference of every feasible set with a fixed set");
  tw->add_option("file", file)->required();
  tw->add_option("--set", set_text, "Subset as 0x-prefixed hex mask")->required();
  with_raw(tw);
  tw->callback([&run, load, emit] {
    run.action = [load, emit] {
      const SetSystem s = load();
      emit(twist(s, parse_mask_arg(set_text)));
    };
  });

  auto* sl = ss->add_subcommand("slide", "Second Vassiliev move (handle slide of a over b)");
  sl->add_option("file", file)->required();
  with_pair(sl);
  with_raw(sl);
  sl->callback([&run, load, emit, mode] { run.action = [load, emit, mode] { emit(slide(load(), a, b, mode())); }; });

  auto* ex = ss->add_subcommand("exchange", "First Vassiliev move (end exchange of a and b)");
  ex->add_option("file", file)->required();
  with_pair(ex);
  with_raw(ex);
  ex->callback([&run, load, emit, mode] { run.action = [load, emit, mode] { emit(exchange(load(), a, b, mode())); }; });

  auto* ft = ss->add_subcommand("fourterm", "The four signed systems D, D', D~, D~'");
  ft->add_option("file", file)->required();
  with_pair(ft);
  with_raw(ft);
  ft->callback([&run, load, mode] {
    run.action = [load, mode] { std::cout << format_four_term(four_term(load(), a, b, mode()), !raw); };
  });

  auto* pr = ss->add_subcommand("product", "Direct sum of two set systems");
  pr->add_option("file", file)->required();
  pr->add_option("file2", file2)->required();
  with_raw(pr);
  pr->callback([&run, load, emit] {
    run.action = [load, emit] {
      const SetSystem s = load();
      const SetSystem t = read_file(file2, [](std::istream& in) { return read_set_system(in); });
      emit(product(s, t));
    };
  });

  auto* re = ss->add_subcommand("restrict", "Restriction to a subset of the ground set");
  re->add_option("file", file)->required();
  re->add_option("--set", set_text, "Subset as 0x-prefixed hex mask")->required();
  with_raw(re);
  re->callback([&run, load, emit] {
    run.action = [load, emit] {
      const SetSystem s = load();
      const Mask keep = parse_mask_arg(set_text);
      check_mask(s, keep);
      emit(restrict_to(s, keep));
    };
  });

  auto* de = ss->add_subcommand("delete", "Delete an element (a coloop is contracted)");
  de->add_option("file", file)->required();
  de->add_option("-e", e, "Element (0-based)")->required();
  with_raw(de);
  de->callback([&run, load, emit] { run.action = [load, emit] { emit(delete_element(load(), e)); }; });

  auto* co = ss->add_subcommand("contract", "Contract an element (a loop is deleted)");
  co->add_option("file", file)->required();
  co->add_option("-e", e, "Element (0-based)")->required();
  with_raw(co);
  co->callback([&run, load, emit] { run.action = [load, emit] { emit(contract_element(load(), e)); }; });

  auto* ca = ss->add_subcommand("canon", "Canonical representative of the isomorphism class");
  ca->add_option("file", file)->required();
  ca->callback([&run, load] {
    run.action = [load] { std::cout << format_set_system(canonical_form(load()).to_system()); };
  });
}

void add_graph(CLI::App& app, Runner& run) {
  auto* graph = app.add_subcommand("graph", "Framed graphs given as symmetric F2 matrices");
  graph->require_subcommand(1);
  static std::string file;
  static int a = 0, b = 0;
  auto load = [] { return read_file(file, [](std::istream& in) { return read_framed_graph(in); }); };

  auto* dm = graph->add_subcommand("dm", "Nondegeneracy delta-matroid");
  dm->add_option("file", file, "f2matrix file")->required();
  dm->callback([&run, load] { run.action = [load] { std::cout << format_set_system(nondeg_delta_matroid(load())); }; });

  auto* sl = graph->add_subcommand("slide", "Graph-level handle slide of vertex a over b");
  sl->add_option("file", file, "f2matrix file")->required();
  sl->add_option("-a", a)->required();
  sl->add_option("-b", b)->required();
  sl->callback([&run, load] {
    run.action = [load] { std::cout << format_f2_matrix(graph_slide(load(), a, b).adjacency()); };
  });

  auto* bin = graph->add_subcommand("binary", "Recognize a set system as a twisted nondegeneracy delta-matroid");
  bin->add_option("file", file, "Set-system file")->required();
  bin->callback([&run] {
    run.action = [] {
      const SetSystem s = read_file(file, [](std::istream& in) { return read_set_system(in); });
      const auto witness = recognize_binary(s);
      std::cout << "binary " << yes_no(witness.has_value()) << "\n";
      if (witness) {
        std::cout << "twist " << detail::hex(witness->twist_set) << "\n" << format_f2_matrix(witness->matrix.adjacency());
      }
    };
  });
}

void add_chord(CLI::App& app, Runner& run) {
  auto* chord = app.add_subcommand("chord", "Signed chord diagrams");
  chord->require_subcommand(1);
  static std::string file, a_label, b_label;
  static int position = 0, end = 0;
  auto load = [] { return read_file(file, [](std::istream& in) { return read_chords(in); }); };
  auto chord_index = [](const LabeledChords& c, const std::string& label) {
    for (std::size_t i = 0; i < c.names.size(); ++i) {
      if (c.names[i] == label) return static_cast<int>(i);
    }
    throw Error(ErrorKind::IndexOutOfRange, "no chord labelled '" + label + "'");
  };

  auto* ig = chord->add_subcommand("igraph", "Framed intersection graph");
  ig->add_option("file", file)->required();
  ig->callback([&run, load] {
    run.action = [load] { std::cout << format_f2_matrix(intersection_graph(load().diagram).adjacency()); };
  });

  auto* dm = chord->add_subcommand("dm", "Quasi-tree delta-matroid");
  dm->add_option("file", file)->required();
  dm->callback([&run, load] {
    run.action = [load] { std::cout << format_set_system(ribbon_delta_matroid(load().diagram)); };
  });

  auto* ex = chord->add_subcommand("exchange", "Exchange the ends at word positions p and p+1");
  ex->add_option("file", file)->required();
  ex->add_option("-p", position, "Word position (0-based)")->required();
  ex->callback([&run, load] {
    run.action = [load] {
      LabeledChords c = load();
      c.diagram = chord_end_exchange(c.diagram, position);
      std::cout << format_chords(c);
    };
  });

  auto* sl = chord->add_subcommand("slide", "Slide one end of chord a over chord b");
  sl->add_option("file", file)->required();
  sl->add_option("-a", a_label, "Label of the sliding chord")->required();
  sl->add_option("-b", b_label, "Label of the chord slid over")->required();
  sl->add_option("--end", end, "Which end of a: 0 = earlier in the word, 1 = later")->check(CLI::Range(0, 1));
  sl->callback([&run, load, chord_index] {
    run.action = [load, chord_index] {
      LabeledChords c = load();
      c.diagram = chord_slide(c.diagram, chord_index(c, a_label), chord_index(c, b_label), end);
      std::cout << format_chords(c);
    };
  });
}

void add_ribbon(CLI::App& app, Runner& run) {
  auto* ribbon = app.add_subcommand("ribbon", "Ribbon graphs as signed rotation systems");
  ribbon->require_subcommand(1);
  static std::string file, edges_text;
  auto load = [] { return read_file(file, [](std::istream& in) { return read_ribbon(in); }); };

  auto* dm = ribbon->add_subcommand("dm", "Quasi-tree delta-matroid (connected graphs only)");
  dm->add_option("file", file)->required();
  dm->callback([&run, load] { run.action = [load] { std::cout << format_set_system(ribbon_delta_matroid(load())); }; });

  auto* bd = ribbon->add_subcommand("boundary", "Boundary circles of a spanning ribbon subgraph");
  bd->add_option("file", file)->required();
  bd->add_option("--edges", edges_text, "Edge subset as 0x-prefixed hex mask")->required();
  bd->callback([&run, load] {
    run.action = [load] {
      const RibbonGraph r = load();
      std::cout << boundary_components(r, parse_mask_arg(edges_text)) << "\n";
    };
  });
}

void add_hopf(CLI::App& app, Runner& run) {
  auto* hopf = app.add_subcommand("hopf", "Graded Hopf algebras of delta-matroids");
  hopf->require_subcommand(1);
  static std::string flavor_name, what;
  static int degree = 0;

  auto* dims = hopf->add_subcommand("dims", "Print one dimension");
  dims->add_option("--flavor", flavor_name, "S, B, Be, K, Ke, FB, FBe, FK or FKe")->required();
  dims->add_option("--degree", degree, "Degree")->required();
  dims->add_option("--what", what, "basis|primitive|decomposable|quotient|quotient-primitive")
      ->required()
      ->check(CLI::IsMember({"basis", "primitive", "decomposable", "quotient", "quotient-primitive"}));
  dims->callback([&run] {
    run.action = [] {
      const auto flavor = parse_flavor(flavor_name);
      if (!flavor) throw Error(ErrorKind::ParseError, "unknown flavor '" + flavor_name + "'");
      long value = 0;
      if (what == "basis") {
        value = static_cast<long>(enumerate_basis(*flavor, degree).size());
      } else if (what == "primitive") {
        value = primitive_dim_any(*flavor, degree);
      } else if (what == "decomposable") {
        value = decomposable_dim(*flavor, degree);
      } else if (what == "quotient") {
        value = four_term_quotient(*flavor, degree).quotient_dim;
      } else {
        value = quotient_primitive_dim(*flavor, degree);
      }
      std::cout << value << "\n";
    };
  });

  auto* t1 = hopf->add_subcommand("table1", "Primitive dimensions in degrees 1 and 2 against the published table");
  t1->callback([&run] {
    run.action = [] {
      const auto rows = table1_report();
      std::cout << format_table1(rows);
      for (const auto& r : rows) {
        if (!r.matches()) throw VerificationFailure("table mismatch");
      }
    };
  });
}

void add_inv(CLI::App& app, Runner& run) {
  auto* inv = app.add_subcommand("inv", "Invariants: Tutte relations, Conway weight system");
  inv->require_subcommand(1);
  static std::string file, x = "1", y = "1", z = "1", w = "1", pivot = "lowest";
  static bool audit = false;
  static int n_max = 3;
  auto params = [] {
    return TutteParams{parse_rational(x), parse_rational(y), parse_rational(z), parse_rational(w)};
  };
  auto with_params = [](CLI::App* cmd) {
    cmd->add_option("-x", x, "Rational p or p/q");
    cmd->add_option("-y", y, "Rational p or p/q");
    cmd->add_option("-z", z, "Rational p or p/q");
    cmd->add_option("-w", w, "Rational p or p/q");
  };

  auto* tu = inv->add_subcommand("tutte", "Deletion-contraction evaluation along a fixed pivot order");
  tu->add_option("file", file)->required();
  with_params(tu);
  tu->add_option("--pivot", pivot, "lowest or highest")->check(CLI::IsMember({"lowest", "highest"}));
  tu->add_flag("--audit", audit, "Compare every pivot order (ground sets up to 6 elements)");
  tu->callback([&run, params] {
    run.action = [params] {
      const SetSystem s = read_file(file, [](std::istream& in) { return read_set_system(in); });
      const auto ev = tutte_eval_ordered(s, params(), pivot == "lowest" ? Pivot::Lowest : Pivot::Highest, audit);
      std::cout << "value " << format_rational(ev.value) << "\n";
      if (audit) {
        std::cout << "audit " << (ev.orders_agree ? (*ev.orders_agree ? "agree" : "disagree") : "skipped") << "\n";
      }
    };
  });

  auto* so = inv->add_subcommand("solve", "Solution space of the Tutte relations on binary classes");
  so->add_option("--n", n_max, "Largest degree")->required();
  with_params(so);
  so->callback([&run, params] {
    run.action = [params] {
      const auto sol = tutte_solve(n_max, params());
      if (!sol) {
        std::cout << "infeasible\n";
        return;
      }
      std::cout << "dimension " << sol->dimension() << "\n";
      auto print = [&](const std::string& title, const std::vector<Rational>& values) {
        std::cout << title << "\n";
        for (std::size_t i = 0; i < sol->classes.size(); ++i) {
          std::cout << class_label(sol->classes[i]) << " : " << format_rational(values[i]) << "\n";
        }
      };
      print("particular", sol->particular);
      for (std::size_t k = 0; k < sol->kernel.size(); ++k) print("kernel " + std::to_string(k), sol->kernel[k]);
    };
  });

  auto* cw = inv->add_subcommand("conway", "Conway weight system: 1 iff the ground set is feasible");
  cw->add_option("file", file)->required();
  cw->callback([&run] {
    run.action = [] {
      std::cout << conway_w(read_file(file, [](std::istream& in) { return read_set_system(in); })) << "\n";
    };
  });

  auto* lw = inv->add_subcommand("logwc", "Convolution logarithm of the Conway weight system");
  lw->add_option("--degree", n_max, "Largest degree")->required();
  lw->callback([&run] {
    run.action = [] {
      const Functional log = convolution_log(conway_functional(n_max), n_max);
      for (const auto& code : classes_up_to(Flavor::B, n_max)) {
        std::cout << class_label(code) << " : " << format_rational(log.at(code)) << "\n";
      }
    };
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Delta-matroids, Vassiliev moves and their Hopf algebras"};
  app.require_subcommand(1);
  Runner run;
  add_ss(app, run);
  add_graph(app, run);
  add_chord(app, run);
  add_ribbon(app, run);
  add_hopf(app, run);
  add_inv(app, run);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (run.action) run.action();
    return kExitOk;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == ErrorKind::ParseError ? kExitParse : kExitDomain;
  } catch (const VerificationFailure& e) {
    std::cerr << e.what() << "\n";
    return kExitVerification;
  }
}
