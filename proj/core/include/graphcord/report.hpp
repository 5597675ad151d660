#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphcord/concurrence.hpp"
#include "graphcord/lc.hpp"
#include "graphcord/state.hpp"

namespace graphcord {

// Fixed 4-decimal rendering used everywhere a concurrence is printed.
std::string format_concurrence(double value);

struct ClassificationRow {
  int n;
  int class_index;  // 1-based, ascending concurrence
  double concurrence_float;
  std::int64_t radicand_num;
  std::int64_t radicand_den;
  std::uint32_t representative_code;
  std::size_t labeled_count;
  std::size_t representative_count;
};

std::vector<ClassificationRow> classification_rows(const ConcurrenceClassification& c);
std::string classification_csv(const std::vector<ClassificationRow>& rows);
std::string classification_json(const std::vector<ClassificationRow>& rows);
std::string classification_text(const ConcurrenceClassification& c);

struct OrbitRow {
  int n;
  int class_index;  // 1-based
  std::size_t size_labeled;
  std::size_t size_representatives;
  double concurrence_float;
  std::int64_t radicand_num;
  std::int64_t radicand_den;
  std::uint32_t representative_code;
  std::string representative_text;
};

std::vector<OrbitRow> orbit_rows(const OrbitReport& r);
// One line per class:
// class=<k> size_labeled=<int> size_representatives=<int> concurrence=<float>
// representative=<graph text format>
std::string orbit_text(const OrbitReport& r);
std::string orbit_csv(const std::vector<OrbitRow>& rows);
std::string orbit_json(const std::vector<OrbitRow>& rows);

// One line per basis label: "|b1b2...bn> <sign>"; dense states print "re,im"
// with 12 significant digits.
std::string graph_state_dump(const GraphState& s);
std::string dense_state_dump(const DenseState& s);

}  // namespace graphcord
