#include <doctest.h>

#include <filesystem>
#include <random>

#include "radspec/frobenius.hpp"
#include "radspec/io.hpp"
#include "radspec/records.hpp"
#include "radspec/ritz.hpp"

namespace io = radspec::io;

namespace {

io::OutputRecord table_record() {
  io::OutputRecord rec;
  rec.kind = io::RecordKind::Table;
  rec.add_metadata("gamma", 0.0);
  rec.add_metadata("a", 2.0);
  rec.add_metadata("note", "has, a comma");
  rec.columns = {"nu", "W", "status"};
  rec.rows.push_back({0.0, -3.230518994, std::string("ok")});
  rec.rows.push_back({1.0, 4.510929109, std::string("say \"hi\"")});
  return rec;
}

}  // namespace

TEST_CASE("a table cell survives CSV and JSON") {
  const auto rec = table_record();
  const std::string csv = io::to_csv(rec);
  CHECK(csv.rfind("# kind: table\n", 0) == 0);
  CHECK(csv.find("-3.230518994") != std::string::npos);
  const auto back = io::parse_csv(csv);
  CHECK(std::get<double>(back.rows[0][1]) == -3.230518994);
  CHECK(std::get<std::string>(back.rows[1][2]) == "say \"hi\"");
  CHECK(back.metadata == rec.metadata);
  CHECK(io::to_csv(back) == csv);

  const std::string json = io::to_json(rec);
  const auto from_json = io::parse_json(json);
  CHECK(std::get<double>(from_json.rows[0][1]) == -3.230518994);
  CHECK(io::to_json(from_json) == json);
  // Both formats carry the same content.
  CHECK(io::to_csv(from_json) == csv);
  CHECK(io::to_json(back) == json);
}

TEST_CASE("empty payload keeps its header") {
  io::OutputRecord rec;
  rec.kind = io::RecordKind::CurveScan;
  rec.columns = {"a", "W0"};
  const auto back = io::parse_csv(io::to_csv(rec));
  CHECK(back.kind == io::RecordKind::CurveScan);
  CHECK(back.columns == rec.columns);
  CHECK(back.rows.empty());
  CHECK(io::parse_json(io::to_json(rec)).rows.empty());
}

TEST_CASE("byte-identical round trip of a large record") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-1e3, 1e3);
  io::OutputRecord rec;
  rec.kind = io::RecordKind::Profile;
  rec.columns = {"xi", "density"};
  for (int k = 0; k < 300; ++k) {
    rec.rows.push_back({dist(rng), dist(rng) * 1e-7});
  }
  const std::string csv = io::to_csv(rec);
  CHECK(io::to_csv(io::parse_csv(csv)) == csv);
  const std::string json = io::to_json(rec);
  CHECK(io::to_json(io::parse_json(json)) == json);
}

TEST_CASE("truncation record") {
  namespace fb = radspec::frobenius;
  const auto roots = fb::truncation_roots_a(2, 0.0, 1.0);
  const auto sols = fb::solutions_in_a(2, 0.0, 1.0);
  const auto rec = radspec::records::truncation(sols, roots, true, 2, 0.0, 1.0);
  CHECK(rec.kind == io::RecordKind::TruncationRoots);
  REQUIRE(rec.rows.size() == 3);
  CHECK(rec.columns[1] == "a");
  const auto back = io::parse_json(io::to_json(rec));
  CHECK(io::cell_text(back.rows[2][1]) == "5.250535221");
  CHECK(io::cell_text(back.rows[0][2]) == "5.75");
}

TEST_CASE("spectrum record without the oracle") {
  const auto res = radspec::ritz::spectrum({0.0, 2.0, 1.0}, 2, 1e-10);
  const auto rec = radspec::records::spectrum(res, 1e-10, std::nullopt, std::nullopt);
  REQUIRE(rec.rows.size() == 2);
  const auto w = std::find(rec.columns.begin(), rec.columns.end(), "W");
  REQUIRE(w != rec.columns.end());
  CHECK(io::cell_text(rec.rows[0][w - rec.columns.begin()]) == "-3.230518994");
}

TEST_CASE("cells") {
  CHECK(std::holds_alternative<double>(io::parse_cell("1e-3")));
  CHECK(std::holds_alternative<std::string>(io::parse_cell("pass")));
  CHECK(std::holds_alternative<std::string>(io::parse_cell("1.5x")));
  CHECK(io::cell_text(io::Cell{0.1}) == "0.1");
  CHECK(io::to_string(io::parse_kind("verify_report")) == "verify_report");
  CHECK_THROWS_AS(io::parse_kind("nope"), io::IoError);
}

TEST_CASE("malformed input and bad paths") {
  CHECK_THROWS_AS(io::parse_csv(""), io::IoError);
  CHECK_THROWS_AS(io::parse_csv("# kind: table\na,b\n1\n"), io::IoError);
  CHECK_THROWS_AS(io::parse_json("{"), io::IoError);
  CHECK_THROWS_AS(io::parse_json("[1, 2]"), io::IoError);
  const std::filesystem::path missing = "/nonexistent-dir/out.csv";
  try {
    io::write_csv(table_record(), missing);
    FAIL("expected IoError");
  } catch (const io::IoError& e) {
    CHECK(std::string(e.what()).find(missing.string()) != std::string::npos);
  }
  CHECK_THROWS_AS(io::read_file(missing), io::IoError);
}

TEST_CASE("files round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "radspec_test_io";
  std::filesystem::create_directories(dir);
  const auto rec = table_record();
  io::write_csv(rec, dir / "t.csv");
  io::write_json(rec, dir / "t.json");
  CHECK(io::read_file(dir / "t.csv") == io::to_csv(rec));
  CHECK(io::read_file(dir / "t.json") == io::to_json(rec));
  std::filesystem::remove_all(dir);
}
