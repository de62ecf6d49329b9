#pragma once

#include <string>
#include <vector>

#include "ccg/centralizers.hpp"
#include "ccg/classes.hpp"

namespace ccg {

// Matrix file: "n q", then n rows of n base-p encoded entries separated by
// single spaces, LF line endings. q is the size of the entry field.
std::string write_matrix(const Matrix& x);
Matrix read_matrix(const std::string& text, const FieldPtr& F);

// Form file: "kind n q type", then the Gram matrix rows.
std::string write_form(const Form& f);
Form read_form(const std::string& text, const FieldPtr& F);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

struct ClassRecord {
  std::string label;
  std::vector<std::vector<Elt>> rep;
  BigInt size;
  BigInt centralizer_order;
};

struct TableRecord {
  std::string group;
  BigInt order;
  std::vector<ClassRecord> classes;
};

// Representatives are written in the basis of the spec's user form, if any.
TableRecord table_record(const ClassTable& table, const std::vector<size_t>& which);
TableRecord table_record(const ClassTable& table);
std::string to_json(const TableRecord& t);
std::string to_text(const TableRecord& t);
TableRecord parse_table_json(const std::string& text);

std::string to_json(const CentralizerDescription& d, const GroupSpec& spec);
std::string to_text(const CentralizerDescription& d, const GroupSpec& spec);

}  // namespace ccg
