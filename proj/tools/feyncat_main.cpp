#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <feyncat/algebra.hpp>
#include <feyncat/instances/ck_tree.hpp>
#include <feyncat/instances/registry.hpp>
#include <feyncat/render.hpp>

using namespace feyncat;

namespace {

constexpr const char* kGrammarHelp = R"(Inline element grammars by instance:
  surj-ord / surj-sym   pi(n)              the rank-n generator
  joyal                 j(n)               the rank-n injection generator
  seq:<letters>         seq(a,b,c)         a word over the declared alphabet
  nerve:<file>          ch(f,g,...)        a composable chain of morphism names
  ck-tree-*             |                  the single-edge line tree (tailed modes)
                        ladder(n)          the n-vertex ladder tree
                        B(x,...)           root-grafting of subtrees; B() is the
                                           one-vertex tree, | inside B marks a tail
  ck-graph-*            loop()             one vertex with a self-loop
                        banana(n)          two vertices joined by n edges
                        cycle(n)           the n-cycle
                        graph(<json>)      an explicit graph object

Input may also be a JSON element: {"terms":[{"word":[...],"coeff":"p/q"}]}
where each word entry is a class key or an inline expression.)";

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file " + path);
  out << text << "\n";
}

std::string render_elem(const InstanceSpec& inst, const Elem& x,
                        const std::string& fmt) {
  if (fmt == "json") return elem_to_json(inst, x).dump(2);
  if (fmt == "latex") return elem_latex(inst, x);
  return elem_text(inst, x);
}

std::string render_tensor(const InstanceSpec& inst, const Tensor2& x,
                          const std::string& fmt) {
  if (fmt == "json") return tensor_to_json(inst, x).dump(2);
  if (fmt == "latex") return tensor_latex(inst, x);
  return tensor_text(inst, x);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"feyncat: exact bialgebra and Hopf algebra computations on "
               "combinatorial classes"};
  app.footer(kGrammarHelp);
  app.require_subcommand(1);

  std::string instance_name, format = "text", output_path;
  std::vector<std::string> inputs;
  int max_degree = 4;
  unsigned seed = 1;

  auto add_common = [&](CLI::App* sub, int ninputs) {
    sub->add_option("--instance", instance_name, "instance name")->required();
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "latex", "text"}));
    sub->add_option("--output", output_path, "write output to a file");
    if (ninputs > 0)
      sub->add_option("input", inputs, "element(s): inline expression or JSON")
          ->expected(ninputs);
    return sub;
  };

  auto* sc_cop = add_common(app.add_subcommand("coproduct", "full coproduct"), 1);
  auto* sc_red = add_common(app.add_subcommand("reduced", "reduced coproduct"), 1);
  auto* sc_ant = add_common(app.add_subcommand("antipode", "antipode"), 1);
  auto* sc_pro = add_common(app.add_subcommand("product", "product of two elements"), 2);
  auto* sc_amp = add_common(
      app.add_subcommand("amputate", "project a tailed tree instance onto its "
                                     "amputated quotient"),
      1);
  auto* sc_can = add_common(
      app.add_subcommand("canonical", "normal form of an element"), 1);
  auto* sc_ver = app.add_subcommand("verify", "run the axiom checks");
  sc_ver->add_option("--instance", instance_name, "instance name")->required();
  sc_ver->add_option("--max-degree", max_degree, "generator degree bound")
      ->check(CLI::NonNegativeNumber);
  sc_ver->add_option("--seed", seed, "seed for randomized pair checks");
  sc_ver->add_option("--output", output_path, "write report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 1;
  }

  try {
    InstanceSpec inst = instance_by_name(instance_name);

    if (sc_ver->parsed()) {
      VerifyOptions opt;
      opt.seed = seed;
      AxiomReport rep = verify_axioms(inst, max_degree, opt);
      std::string report;
      for (auto& [name, ok] : rep.checks)
        report += (ok ? "pass " : "FAIL ") + name + "\n";
      if (!rep.all_pass())
        report += "counterexample: " + rep.counterexample + "\n";
      report += rep.all_pass() ? "all-pass" : "axiom failure";
      write_out(output_path, report);
      return rep.all_pass() ? 0 : 2;
    }

    Elem x = elem_from_input(inst, inputs.at(0));

    if (sc_cop->parsed()) {
      write_out(output_path, render_tensor(inst, coproduct_iso(inst, x), format));
    } else if (sc_red->parsed()) {
      write_out(output_path, render_tensor(inst, reduced_coproduct(inst, x), format));
    } else if (sc_ant->parsed()) {
      write_out(output_path, render_elem(inst, antipode(inst, x), format));
    } else if (sc_pro->parsed()) {
      Elem y = elem_from_input(inst, inputs.at(1));
      write_out(output_path, render_elem(inst, product(inst, x, y), format));
    } else if (sc_amp->parsed()) {
      InstanceSpec target = instance_by_name(instance_name + "-amp");
      write_out(output_path, render_elem(target, ck_tree_amputate(target, x), format));
    } else if (sc_can->parsed()) {
      write_out(output_path, render_elem(inst, x, format));
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
