// Command line front end. Talks to the core exclusively through the C API.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rbla/rbla.h"

namespace {

constexpr const char* kCheckers =
    "lie, prelie, ldend, rb, rb-prelie, rep, rb-rep, admissible, form, "
    "lie-coalg, rb-coalg, lie-bialg, rb-bialg, sld-coalg, sld-bialg, "
    "matched-pair, matched-pair-rb, matched-pair-prelie, manin-rb, "
    "manin-prelie, cybe, o-operator, cond-coboundary, same-construction, "
    "triple-equivalence";

constexpr const char* kBuilders =
    "induce-prelie, subadjacent, dual-rep, adjoint-op, semidirect, "
    "semidirect-rb, special-ldend, left-invariant-ldend, double-manin, "
    "coboundary-delta, lift-o, bialgebras-from-o, canonical-r, induce-sld, "
    "sld-from-o, cons1, cons2, iterate-family";

struct Cli {
  std::string file;
  std::string what;
  std::string op;
  std::string out_path;
  std::string q;
  std::string rep;
  std::string format; // empty = text summary plus JSON body
  bool special = true;
  bool weak = false;

  rbla_options options() const {
    return rbla_options{q.empty() ? nullptr : q.c_str(),
                        rep.empty() ? nullptr : rep.c_str(), special ? 0 : 1,
                        weak ? 1 : 0};
  }
};

int fail_input(char* err, const char* fallback) {
  std::cerr << (err ? err : fallback) << "\n";
  rbla_str_free(err);
  return 2;
}

// Loads and parses the input; returns null after printing the error.
rbla_doc* load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot read '" << path << "'\n";
    return nullptr;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string bytes = buf.str();
  rbla_doc* doc = nullptr;
  char* err = nullptr;
  if (rbla_parse(bytes.c_str(), &doc, &err) != RBLA_OK) {
    std::cerr << (err ? err : "parse failed") << "\n";
    rbla_str_free(err);
    return nullptr;
  }
  return doc;
}

// Shared tail of check/report: split the embedded text out of the JSON body
// and print per the requested format.
int emit_report(rbla_status st, char* out, char* err, const std::string& format) {
  if (st == RBLA_E_INPUT || st == RBLA_E_NOMEM) return fail_input(err, "error");
  nlohmann::ordered_json body = nlohmann::ordered_json::parse(out);
  rbla_str_free(out);
  std::string text = body.value("text", "");
  body.erase("text");
  if (format != "json") std::cout << text;
  if (format != "text") std::cout << body.dump(2) << "\n";
  return st == RBLA_OK ? 0 : 1;
}

int cmd_check(const Cli& cli) {
  rbla_doc* doc = load(cli.file);
  if (!doc) return 2;
  rbla_options opt = cli.options();
  char* out = nullptr;
  char* err = nullptr;
  rbla_status st = rbla_check(doc, cli.what.c_str(), &opt, &out, &err);
  rbla_doc_free(doc);
  return emit_report(st, out, err, cli.format);
}

int cmd_report(const Cli& cli) {
  rbla_doc* doc = load(cli.file);
  if (!doc) return 2;
  rbla_options opt = cli.options();
  char* out = nullptr;
  char* err = nullptr;
  rbla_status st = rbla_report(doc, &opt, &out, &err);
  rbla_doc_free(doc);
  return emit_report(st, out, err, cli.format);
}

int cmd_derive(const Cli& cli) {
  rbla_doc* doc = load(cli.file);
  if (!doc) return 2;
  rbla_options opt = cli.options();
  rbla_doc* derived = nullptr;
  char* err = nullptr;
  rbla_status st = rbla_derive(doc, cli.op.c_str(), &opt, &derived, &err);
  rbla_doc_free(doc);
  if (st == RBLA_FAIL) {
    std::cerr << (err ? err : "construction failed") << "\n";
    rbla_str_free(err);
    return 1;
  }
  if (st != RBLA_OK) return fail_input(err, "derive failed");
  char* text = nullptr;
  st = rbla_serialize(derived, &text, &err);
  rbla_doc_free(derived);
  if (st != RBLA_OK) return fail_input(err, "serialize failed");
  int code = 0;
  if (cli.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream outf(cli.out_path, std::ios::binary);
    if (outf) {
      outf << text;
    } else {
      std::cerr << "cannot write '" << cli.out_path << "'\n";
      code = 2;
    }
  }
  rbla_str_free(text);
  return code;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checker for Rota-Baxter Lie and pre-Lie structures"};
  app.require_subcommand(1);
  Cli cli;

  CLI::App* check = app.add_subcommand("check", "run one named checker");
  check->add_option("file", cli.file, "input document")->required();
  check->add_option("--what", cli.what, std::string("checker: ") + kCheckers)->required();

  CLI::App* derive = app.add_subcommand("derive", "run one named builder");
  derive->add_option("file", cli.file, "input document")->required();
  derive->add_option("--op", cli.op, std::string("builder: ") + kBuilders)->required();
  derive->add_option("-o,--out", cli.out_path, "output file (default stdout)");

  CLI::App* report = app.add_subcommand("report", "run every applicable checker");
  report->add_option("file", cli.file, "input document")->required();

  CLI::App* version = app.add_subcommand("version", "print the library version");

  for (CLI::App* sub : {check, derive, report}) {
    sub->add_option("--q", cli.q,
                    "coalgebra-side operator: a name, or 0, -P, -P-lid, Phat");
    sub->add_option("--rep", cli.rep, "representation block to use");
  }
  for (CLI::App* sub : {check, report}) {
    sub->add_option("--format", cli.format, "output: text, json, or both (default)")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--special,!--no-special", cli.special,
                  "require the antisymmetry half of the L-dendriform laws");
    sub->add_flag("--weak", cli.weak, "drop the pairing half of the O-operator laws");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2; // usage problems are input errors
  }

  if (check->parsed()) return cmd_check(cli);
  if (derive->parsed()) return cmd_derive(cli);
  if (report->parsed()) return cmd_report(cli);
  if (version->parsed()) {
    std::cout << rbla_version() << "\n";
    return 0;
  }
  return 2;
}
