#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ccg/centralizers.hpp"
#include "ccg/classes.hpp"
#include "ccg/conjugacy.hpp"
#include "ccg/io.hpp"
#include "ccg/oracle.hpp"
#include "ccg/verify.hpp"
#include "json.hpp"

using namespace ccg;

namespace {

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kNotConjugate = 3, kNotInGroup = 4 };

struct Options {
  std::string group;
  int n = 0, q = 0;
  std::string form_file, out;
  bool json = false;
  uint64_t max_order = 0;
  uint32_t seed = 0;
  std::string filter = "all";
  std::vector<std::string> files;
};

GroupSpec load_group(const Options& o) {
  GroupSpec g = make_group(o.group, o.n, o.q);
  if (!o.form_file.empty()) g = with_user_form(g, read_form(read_file(o.form_file), g.F));
  return g;
}

// Matrices from files are in the user's basis; the library works in the standard one.
Matrix load_element(const GroupSpec& g, const std::string& path) {
  Matrix x = read_matrix(read_file(path), g.F);
  if (x.r != g.n) throw Error("Parse", path + " is not " + std::to_string(g.n) + "x" + std::to_string(g.n));
  return to_standard(g, x);
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty())
    std::cout << text;
  else
    write_file(o.out, text);
}

uint64_t oracle_cap(const Options& o) {
  if (o.max_order) return o.max_order;
  if (const char* env = std::getenv("CCG_MAX_ORDER")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (!*env || *end || v == 0) throw Error("Usage", "CCG_MAX_ORDER must be a positive integer");
    return v;
  }
  return kDefaultOracleCap;
}

std::string not_in_group_reason(const GroupSpec& g, const Matrix& x) {
  GroupSpec amb = g.isometry_group();
  if (!contains(amb, x)) return amb.has_form() ? "not an isometry of the form" : "not invertible";
  auto a = phi(g, x);
  std::ostringstream os;
  os << "image in the quotient by " << g.name() << " is (";
  for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ")";
  if (g.family == Family::Omega && !g.F->char_two() && a.size() == 2) os << ", spinor norm " << a[1];
  return os.str();
}

int list_classes_cmd(const Options& o) {
  GroupSpec g = load_group(o);
  ClassFilter f = o.filter == "unipotent" ? ClassFilter::Unipotent
                  : o.filter == "semisimple" ? ClassFilter::Semisimple
                                             : ClassFilter::All;
  ClassTable table(g, f);
  auto rec = table_record(table);
  emit(o, o.json ? to_json(rec) : to_text(rec));
  return kOk;
}

int centralizer_cmd(const Options& o) {
  GroupSpec g = load_group(o);
  Matrix x = load_element(g, o.files.at(0));
  if (!contains(g, x)) throw Error("NotInGroup", "element is not in " + g.name() + ": " + not_in_group_reason(g, x));
  auto d = centralizer(x, g, true, o.seed);
  emit(o, o.json ? to_json(d, g) : to_text(d, g));
  return kOk;
}

int conjugate_cmd(const Options& o) {
  GroupSpec g = load_group(o);
  Matrix x = load_element(g, o.files.at(0)), y = load_element(g, o.files.at(1));
  for (auto* m : {&x, &y})
    if (!contains(g, *m)) throw Error("NotInGroup", "element is not in " + g.name() + ": " + not_in_group_reason(g, *m));
  auto c = conjugator(x, y, g, o.seed);
  if (!c.conjugate) {
    nlohmann::ordered_json j{{"conjugate", false}, {"reason", c.reason}};
    emit(o, j.dump(2) + "\n");
    return kNotConjugate;
  }
  emit(o, write_matrix(from_standard(g, *c.witness)));
  return kOk;
}

int membership_cmd(const Options& o) {
  GroupSpec g = load_group(o);
  Matrix x = load_element(g, o.files.at(0));
  bool member = contains(g, x);
  std::string reason = member ? "" : not_in_group_reason(g, x);
  auto adm = gl_class_admissible(elementary_divisors(x), g.family, *g.F);
  if (o.json) {
    nlohmann::ordered_json j{{"group", g.name()}, {"member", member}, {"reason", reason},
                             {"gl_class_admissible", adm.admissible}};
    j["allowed_types"] = nlohmann::ordered_json::array();
    for (auto t : adm.allowed_types) j["allowed_types"].push_back(to_string(t));
    emit(o, j.dump(2) + "\n");
  } else {
    std::string text = member ? "member of " + g.name() + "\n" : "not in " + g.name() + ": " + reason + "\n";
    text += std::string("GL class meets the isometry group: ") + (adm.admissible ? "yes" : "no") + "\n";
    emit(o, text);
  }
  return member ? kOk : kNotInGroup;
}

int verify_cmd(const Options& o) {
  GroupSpec g = load_group(o);
  auto r = verify_against_oracle(g, oracle_cap(o), o.seed);
  emit(o, to_text(r));
  return r.ok() ? kOk : kFailure;
}

int exit_code(const std::string& code) {
  if (code == "NotInGroup") return kNotInGroup;
  if (code == "NotConjugate") return kNotConjugate;
  if (code == "Usage" || code == "Parse" || code == "InvalidSpec" || code == "InvalidForm" || code == "Unsupported")
    return kUsage;
  return kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conjugacy classes, centralizers and conjugators in finite classical groups"};
  app.require_subcommand(1);
  Options o;

  auto add_group = [&](CLI::App* c) {
    c->add_option("--group", o.group, "GL, SL, Sp, U, SU, O, O+, O-, SO, SO+, SO-, Omega, Omega+, Omega-")->required();
    c->add_option("--n", o.n, "dimension")->required()->check(CLI::PositiveNumber);
    c->add_option("--q", o.q, "field size (the fixed field for unitary groups)")->required()->check(CLI::PositiveNumber);
    c->add_option("--form-file", o.form_file, "form defining the group; matrices are read and written in its basis")
        ->check(CLI::ExistingFile);
    c->add_flag("--json", o.json, "JSON output");
    c->add_option("--out", o.out, "write output to this file");
    c->add_option("--seed", o.seed, "seed for randomized steps")->capture_default_str();
  };

  auto* list = app.add_subcommand("list-classes", "list conjugacy class representatives");
  add_group(list);
  list->add_option("--filter", o.filter, "all, unipotent or semisimple")
      ->check(CLI::IsMember({"all", "unipotent", "semisimple"}))
      ->capture_default_str();

  auto* cent = app.add_subcommand("centralizer", "centralizer order, structure and generators");
  add_group(cent);
  cent->add_option("matrix", o.files, "matrix file")->required()->expected(1)->check(CLI::ExistingFile);

  auto* conj = app.add_subcommand("conjugate", "find z with z^-1 x z = y");
  add_group(conj);
  conj->add_option("matrices", o.files, "two matrix files")->required()->expected(2)->check(CLI::ExistingFile);

  auto* memb = app.add_subcommand("membership", "test membership and GL-class admissibility");
  add_group(memb);
  memb->add_option("matrix", o.files, "matrix file")->required()->expected(1)->check(CLI::ExistingFile);

  auto* ver = app.add_subcommand("verify", "compare the class table and centralizers with brute force");
  add_group(ver);
  ver->add_option("--max-order", o.max_order, "oracle cap on |G| (default 10^7, or CCG_MAX_ORDER)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*list) return list_classes_cmd(o);
    if (*cent) return centralizer_cmd(o);
    if (*conj) return conjugate_cmd(o);
    if (*memb) return membership_cmd(o);
    return verify_cmd(o);
  } catch (const Error& e) {
    std::cerr << e.code << ": " << e.what() << "\n";
    return exit_code(e.code);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}
