#include "graphcord/report.hpp"

#include <cmath>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

using namespace graphcord;

namespace {

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream is(s);
  std::string line;
  while (std::getline(is, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream is(line);
  std::string field;
  while (std::getline(is, field, ',')) fields.push_back(field);
  return fields;
}

}  // namespace

TEST_CASE("concurrence values print with four decimals") {
  CHECK(format_concurrence(0.0) == "0.0000");
  CHECK(format_concurrence(1.0) == "1.0000");
  CHECK(format_concurrence(std::sqrt(6.0) / 2) == "1.2247");
  CHECK(format_concurrence(1.5) == "1.5000");
  CHECK(format_concurrence(std::sqrt(19.0 / 8.0)) == "1.5411");
}

TEST_CASE("classification CSV layout") {
  const auto rows = classification_rows(classify_by_concurrence(3));
  const auto lines = split_lines(classification_csv(rows));
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] ==
        "n,class_index,concurrence_float,radicand_num,radicand_den,representative_code,"
        "labeled_count,representative_count");
  CHECK(lines[1] == "3,1,0.0000,0,1,0,1,1");
  CHECK(lines[2] == "3,2,1.0000,2,1,1,3,1");
  CHECK(lines[3] == "3,3,1.2247,3,1,3,4,2");
}

TEST_CASE("classification JSON mirrors the CSV rows") {
  const auto rows = classification_rows(classify_by_concurrence(4));
  const auto csv_lines = split_lines(classification_csv(rows));
  const auto json = nlohmann::json::parse(classification_json(rows));
  REQUIRE(json.size() == csv_lines.size() - 1);
  for (std::size_t i = 0; i < json.size(); ++i) {
    const auto fields = split_csv(csv_lines[i + 1]);
    REQUIRE(fields.size() == 8);
    CHECK(json[i]["n"].get<int>() == std::stoi(fields[0]));
    CHECK(json[i]["class_index"].get<int>() == std::stoi(fields[1]));
    CHECK(json[i]["concurrence_float"].get<double>() == std::stod(fields[2]));
    CHECK(json[i]["radicand_num"].get<std::int64_t>() == std::stoll(fields[3]));
    CHECK(json[i]["radicand_den"].get<std::int64_t>() == std::stoll(fields[4]));
    CHECK(json[i]["representative_code"].get<std::uint32_t>() ==
          static_cast<std::uint32_t>(std::stoul(fields[5])));
    CHECK(json[i]["labeled_count"].get<std::size_t>() == std::stoull(fields[6]));
    CHECK(json[i]["representative_count"].get<std::size_t>() == std::stoull(fields[7]));
  }
}

TEST_CASE("orbit lines carry the pinned fields") {
  const auto report = lc_orbits(3, true);
  const auto lines = split_lines(orbit_text(report));
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] ==
        "class=1 size_labeled=1 size_representatives=1 concurrence=0.0000 "
        "representative=n=3;edges=");
  CHECK(lines[2] ==
        "class=3 size_labeled=4 size_representatives=2 concurrence=1.2247 "
        "representative=n=3;edges=1-2,1-3");

  const auto rows = orbit_rows(report);
  const auto json = nlohmann::json::parse(orbit_json(rows));
  REQUIRE(json.size() == 3);
  CHECK(json[1]["size_labeled"].get<std::size_t>() == 3);
  CHECK(json[1]["concurrence_float"].get<double>() == 1.0);
  const auto csv = split_lines(orbit_csv(rows));
  REQUIRE(csv.size() == 4);
  CHECK(split_csv(csv[1]).size() == 9);
}

TEST_CASE("state dumps") {
  const auto plus3 = build_state_phase(Graph(3));
  const auto lines = split_lines(graph_state_dump(plus3));
  REQUIRE(lines.size() == 8);
  CHECK(lines[0] == "|000> +1");
  CHECK(lines[7] == "|111> +1");

  const auto g2 = build_state_phase(Graph::parse("n=3;edges=1-3"));
  CHECK(split_lines(graph_state_dump(g2))[5] == "|101> -1");

  const auto dense = DenseState::from_graph_state(build_state_phase(Graph(1)));
  const auto dense_lines = split_lines(dense_state_dump(dense));
  REQUIRE(dense_lines.size() == 2);
  CHECK(dense_lines[0] == "|0> 0.707106781187,0");
  CHECK(dense_lines[1] == "|1> 0.707106781187,0");
}
