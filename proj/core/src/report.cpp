#include "graphcord/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace graphcord {

namespace {

std::string basis_ket(int n, std::size_t basis) {
  std::string bits;
  for (int q = 0; q < n; ++q) bits += basis_bit(n, basis, q) ? '1' : '0';
  return "|" + bits + ">";
}

std::string format_double(double v, const char* fmt) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

}  // namespace

std::string format_concurrence(double value) { return format_double(value, "%.4f"); }

std::vector<ClassificationRow> classification_rows(const ConcurrenceClassification& c) {
  std::vector<ClassificationRow> rows;
  rows.reserve(c.classes.size());
  int index = 1;
  for (const auto& cls : c.classes) {
    rows.push_back({c.n, index++, std::stod(format_concurrence(cls.value.value)),
                    cls.value.radicand.numerator(), cls.value.radicand.denominator(),
                    cls.representative.code(), cls.members.size(),
                    cls.representative_codes.size()});
  }
  return rows;
}

std::string classification_csv(const std::vector<ClassificationRow>& rows) {
  std::ostringstream os;
  os << "n,class_index,concurrence_float,radicand_num,radicand_den,representative_code,"
        "labeled_count,representative_count\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.class_index << ',' << format_concurrence(r.concurrence_float) << ','
       << r.radicand_num << ',' << r.radicand_den << ',' << r.representative_code << ','
       << r.labeled_count << ',' << r.representative_count << '\n';
  }
  return os.str();
}

std::string classification_json(const std::vector<ClassificationRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    out.push_back({{"n", r.n},
                   {"class_index", r.class_index},
                   {"concurrence_float", r.concurrence_float},
                   {"radicand_num", r.radicand_num},
                   {"radicand_den", r.radicand_den},
                   {"representative_code", r.representative_code},
                   {"labeled_count", r.labeled_count},
                   {"representative_count", r.representative_count}});
  }
  return out.dump(2) + "\n";
}

std::string classification_text(const ConcurrenceClassification& c) {
  std::ostringstream os;
  int index = 1;
  for (const auto& cls : c.classes) {
    os << "class=" << index++ << " concurrence=" << format_concurrence(cls.value.value)
       << " radicand=" << cls.value.radicand.to_string()
       << " labeled=" << cls.members.size()
       << " representatives=" << cls.representative_codes.size()
       << " representative=" << cls.representative.to_text() << '\n';
  }
  return os.str();
}

std::vector<OrbitRow> orbit_rows(const OrbitReport& r) {
  std::vector<OrbitRow> rows;
  rows.reserve(r.classes.size());
  int index = 1;
  for (const auto& cls : r.classes) {
    rows.push_back({r.n, index++, cls.members.size(), cls.representative_count,
                    std::stod(format_concurrence(cls.concurrence.value)),
                    cls.concurrence.radicand.numerator(), cls.concurrence.radicand.denominator(),
                    cls.representative.code(), cls.representative.to_text()});
  }
  return rows;
}

std::string orbit_text(const OrbitReport& r) {
  std::ostringstream os;
  int index = 1;
  for (const auto& cls : r.classes) {
    os << "class=" << index++ << " size_labeled=" << cls.members.size()
       << " size_representatives=" << cls.representative_count
       << " concurrence=" << format_concurrence(cls.concurrence.value)
       << " representative=" << cls.representative.to_text() << '\n';
  }
  return os.str();
}

std::string orbit_csv(const std::vector<OrbitRow>& rows) {
  std::ostringstream os;
  os << "n,class_index,size_labeled,size_representatives,concurrence_float,radicand_num,"
        "radicand_den,representative_code,representative_text\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.class_index << ',' << r.size_labeled << ',' << r.size_representatives
       << ',' << format_concurrence(r.concurrence_float) << ',' << r.radicand_num << ','
       << r.radicand_den << ',' << r.representative_code << ',' << r.representative_text << '\n';
  }
  return os.str();
}

std::string orbit_json(const std::vector<OrbitRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    out.push_back({{"n", r.n},
                   {"class_index", r.class_index},
                   {"size_labeled", r.size_labeled},
                   {"size_representatives", r.size_representatives},
                   {"concurrence_float", r.concurrence_float},
                   {"radicand_num", r.radicand_num},
                   {"radicand_den", r.radicand_den},
                   {"representative_code", r.representative_code},
                   {"representative_text", r.representative_text}});
  }
  return out.dump(2) + "\n";
}

std::string graph_state_dump(const GraphState& s) {
  std::ostringstream os;
  for (std::size_t b = 0; b < s.dimension(); ++b) {
    os << basis_ket(s.qubit_count(), b) << ' ' << (s.sign(b) > 0 ? "+1" : "-1") << '\n';
  }
  return os.str();
}

std::string dense_state_dump(const DenseState& s) {
  std::ostringstream os;
  for (std::size_t b = 0; b < s.dimension(); ++b) {
    const auto a = s.amplitude(b);
    os << basis_ket(s.qubit_count(), b) << ' ' << format_double(a.real(), "%.12g") << ','
       << format_double(a.imag(), "%.12g") << '\n';
  }
  return os.str();
}

}  // namespace graphcord
