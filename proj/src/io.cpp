#include "ccg/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace ccg {

using Json = nlohmann::ordered_json;

namespace {

std::vector<std::vector<Elt>> rows_of(const Matrix& x) {
  std::vector<std::vector<Elt>> r;
  for (int i = 0; i < x.r; ++i) r.push_back(x.row(i));
  return r;
}

Json big_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<uint64_t>::max()) return static_cast<uint64_t>(v);
  return v.str();
}

BigInt json_big(const Json& j) {
  if (j.is_number_unsigned() || j.is_number_integer()) return BigInt(j.get<uint64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw Error("Parse", "expected an integer");
}

Matrix read_rows(std::istream& in, int n, const FieldPtr& F) {
  Matrix x(n, n, F);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long long v;
      if (!(in >> v)) throw Error("Parse", "matrix file has too few entries");
      if (v < 0 || v >= F->size()) throw Error("Parse", "matrix entry out of range");
      x(i, j) = static_cast<Elt>(v);
    }
  std::string rest;
  if (in >> rest) throw Error("Parse", "matrix file has trailing data");
  return x;
}

// Pretty-printed JSON with arrays of numbers kept on one line.
std::string dump(const Json& j) {
  std::string s = j.dump(2), out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '[') {
      size_t k = s.find(']', i);
      std::string inner = s.substr(i + 1, k - i - 1);
      if (inner.find_first_of("[{\"") == std::string::npos && inner.find_first_not_of(" \n") != std::string::npos) {
        std::istringstream in(inner);
        std::string tok, joined;
        while (in >> tok) joined += (joined.empty() ? "" : " ") + tok;
        out += "[" + joined + "]";
        i = k;
        continue;
      }
    }
    out += s[i];
  }
  return out + "\n";
}

}  // namespace

std::string write_matrix(const Matrix& x) {
  return std::to_string(x.r) + " " + std::to_string(x.F->size()) + "\n" + to_string(x);
}

Matrix read_matrix(const std::string& text, const FieldPtr& F) {
  std::istringstream in(text);
  int n, q;
  if (!(in >> n >> q) || n < 1) throw Error("Parse", "matrix file needs a header \"n q\"");
  if (q != F->size()) throw Error("Parse", "matrix file is over F_" + std::to_string(q) + ", expected F_" + std::to_string(F->size()));
  return read_rows(in, n, F);
}

std::string write_form(const Form& f) {
  return to_string(f.kind) + " " + std::to_string(f.n()) + " " + std::to_string(f.gram.F->size()) + " " + to_string(f.type) +
         "\n" + to_string(f.gram);
}

Form read_form(const std::string& text, const FieldPtr& F) {
  std::istringstream in(text);
  std::string kind, type;
  int n, q;
  if (!(in >> kind >> n >> q >> type) || n < 1) throw Error("Parse", "form file needs a header \"kind n q type\"");
  if (q != F->size()) throw Error("Parse", "form file is over F_" + std::to_string(q) + ", expected F_" + std::to_string(F->size()));
  Form f;
  f.kind = parse_form_kind(kind);
  f.type = parse_form_type(type);
  f.gram = read_rows(in, n, F);
  return f;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("Usage", "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("Usage", "cannot write " + path);
  out << text;
}

TableRecord table_record(const ClassTable& table, const std::vector<size_t>& which) {
  TableRecord t{table.spec().name(), table.order(), {}};
  for (size_t k : which) {
    const auto& c = table.classes().at(k);
    t.classes.push_back({c.name, rows_of(from_standard(table.spec(), c.rep)), c.size, c.centralizer_order});
  }
  return t;
}

TableRecord table_record(const ClassTable& table) {
  std::vector<size_t> all(table.classes().size());
  for (size_t k = 0; k < all.size(); ++k) all[k] = k;
  return table_record(table, all);
}

std::string to_json(const TableRecord& t) {
  Json j;
  j["group"] = t.group;
  j["order"] = big_json(t.order);
  j["classes"] = Json::array();
  for (auto& c : t.classes) {
    Json e;
    e["label"] = c.label;
    e["rep"] = c.rep;
    e["size"] = big_json(c.size);
    e["centralizer_order"] = big_json(c.centralizer_order);
    j["classes"].push_back(e);
  }
  return dump(j);
}

std::string to_text(const TableRecord& t) {
  std::ostringstream os;
  os << t.group << " order " << t.order << " classes " << t.classes.size() << "\n";
  for (auto& c : t.classes) os << c.label << "\tsize " << c.size << "\tcentralizer " << c.centralizer_order << "\n";
  return os.str();
}

TableRecord parse_table_json(const std::string& text) {
  try {
    Json j = Json::parse(text);
    TableRecord t;
    t.group = j.at("group").get<std::string>();
    t.order = json_big(j.at("order"));
    for (auto& e : j.at("classes")) {
      ClassRecord c;
      c.label = e.at("label").get<std::string>();
      c.rep = e.at("rep").get<std::vector<std::vector<Elt>>>();
      c.size = json_big(e.at("size"));
      c.centralizer_order = json_big(e.at("centralizer_order"));
      t.classes.push_back(std::move(c));
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error("Parse", std::string("bad class table: ") + e.what());
  }
}

std::string to_json(const CentralizerDescription& d, const GroupSpec& spec) {
  Json j;
  j["order"] = big_json(d.order);
  j["radical_order"] = big_json(d.radical_order);
  j["factors"] = Json::array();
  for (auto& f : d.factors) j["factors"].push_back(Json{{"name", f.name}, {"order", big_json(f.order)}});
  j["generators"] = Json::array();
  for (auto& g : d.generators) j["generators"].push_back(rows_of(from_standard(spec, g)));
  j["verified"] = d.verified;
  return dump(j);
}

std::string to_text(const CentralizerDescription& d, const GroupSpec& spec) {
  std::ostringstream os;
  os << "order " << d.order << "\nradical_order " << d.radical_order << "\nfactors";
  for (auto& f : d.factors) os << " " << f.name << ":" << f.order;
  os << "\ngenerators " << d.generators.size() << (d.verified ? " verified" : " unverified") << "\n";
  for (auto& g : d.generators) os << "\n" << to_string(from_standard(spec, g));
  return os.str();
}

}  // namespace ccg
