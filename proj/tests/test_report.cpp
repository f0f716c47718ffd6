#include "weyres/report.hpp"

#include "doctest.h"

using weyres::Document;
using weyres::OutputFormat;
using weyres::Weight;

TEST_CASE("weights serialize as arrays, largest first") {
  CHECK(weyres::weight_to_json(Weight{{2, 0, -1}}).dump() == "[2,0,-1]");
  CHECK(weyres::weight_to_json(Weight{}).dump() == "[]");
}

TEST_CASE("resolve document carries the schema fields") {
  const auto c = weyres::build_universal_complex(3, 2, 1);
  const auto doc = weyres::resolve_document(c);
  const auto& body = doc.body;
  CHECK(body["m"] == 3);
  CHECK(body["n"] == 2);
  CHECK(body["j"] == 1);
  CHECK(body["det_power"] == 1);
  CHECK(body["terms"].size() == 5);
  CHECK(body["betti"].size() == 3);
  CHECK(body["terms"][0]["gl_n"].is_array());
  // Rendering never throws for any format.
  for (auto f : {OutputFormat::json, OutputFormat::tsv, OutputFormat::pretty})
    CHECK_FALSE(weyres::render(doc, f).empty());
}

TEST_CASE("identical runs produce byte-identical JSON") {
  const auto once = weyres::render(
      weyres::resolve_document(weyres::build_universal_complex(4, 3, 1)),
      OutputFormat::json);
  const auto twice = weyres::render(
      weyres::resolve_document(weyres::build_universal_complex(4, 3, 1)),
      OutputFormat::json);
  CHECK(once == twice);

  const weyres::FieldSpec field{false, 2147483647};
  const auto r1 = weyres::run_verify(2, 2, 1, 2, field, 123, 3, 1);
  const auto r2 = weyres::run_verify(2, 2, 1, 2, field, 123, 3, 1);
  CHECK(weyres::render(weyres::verify_document(r1), OutputFormat::json) ==
        weyres::render(weyres::verify_document(r2), OutputFormat::json));
}

TEST_CASE("crosscheck document reports an empty diff on agreement") {
  const auto doc = weyres::crosscheck_document(
      weyres::build_universal_complex(3, 2, 1),
      weyres::build_complex_via_bbw(3, 2, 1));
  CHECK(doc.body["equal"] == true);
  CHECK(doc.body["only_in_closed_form"].empty());
  CHECK(doc.body["only_in_bbw_path"].empty());
}

TEST_CASE("format parsing") {
  CHECK(weyres::parse_format("json") == OutputFormat::json);
  CHECK(weyres::parse_format("tsv") == OutputFormat::tsv);
  CHECK(weyres::parse_format("pretty") == OutputFormat::pretty);
  CHECK_THROWS(weyres::parse_format("yaml"));
}
