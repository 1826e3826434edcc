#include "irrlab/json_io.hpp"

#include <string>

#include "doctest.h"
#include "irrlab/blocks.hpp"
#include "irrlab/errors.hpp"
#include "irrlab/theorem.hpp"
#include "schema_check.hpp"

using namespace irrlab;
using nlohmann::json;

TEST_CASE("partition documents round trip through verification") {
  Group g({12});
  auto pr = general_partition(g, SizeDemand{{5, 5}});
  json doc = partition_json(pr);

  std::string why;
  CHECK_MESSAGE(schema_ok(load_schema("partition.schema.json"), doc, why), why);
  CHECK(verify_document(doc).pass());

  // Breaking one element breaks a zero sum and the coverage count.
  json bad = doc;
  bad["parts"][0][0] = "4";
  auto cert = verify_document(bad);
  CHECK_FALSE(cert.pass());

  json missing = doc;
  missing.erase("path");
  CHECK_THROWS_AS(verify_document(missing), input_error);
  CHECK_THROWS_AS(verify_document(json::object()), input_error);
  CHECK_THROWS_AS(verify_document(json{{"kind", "mystery"}}),
                  input_error);
}

TEST_CASE("block documents carry kinds and witnesses") {
  Group z10({10});
  auto zparts = zeng_partition(10, 2, 1);
  json zdoc = blocks_json("zeng", z10, {{0}, {5}}, zparts);
  std::string why;
  CHECK_MESSAGE(schema_ok(load_schema("blocks.schema.json"), zdoc, why), why);
  CHECK(zdoc["certificate"]["pass"] == true);
  CHECK(verify_document(zdoc).pass());

  Group z9({9});
  auto sparts = skolem_partition(z9);
  json sdoc = blocks_json("skolem", z9, {{0}}, sparts);
  CHECK_MESSAGE(schema_ok(load_schema("blocks.schema.json"), sdoc, why), why);
  CHECK(verify_document(sdoc).pass());

  // Tampered witnesses no longer spell out the six-element block.
  json bad = sdoc;
  bad["parts"][0]["witnesses"][0] = "4";
  CHECK_FALSE(verify_document(bad).pass());
}

TEST_CASE("labeling documents detect tampering") {
  Group g({16});
  Digraph d = parse_digraph(
      "v a\nv b\nv c\nv d\nv e\nv f\nv g2\nv h\n"
      "a b\nb c\nc d\nd a\ne f\nf g2\ng2 h\n");
  auto lab = label_digraph(g, d);
  json doc = labeling_json(d, lab);
  std::string why;
  CHECK_MESSAGE(schema_ok(load_schema("labeling.schema.json"), doc, why), why);
  CHECK(verify_document(doc).pass());

  json bad = doc;
  std::string old = bad["arcs"][0]["label"].get<std::string>();
  bad["arcs"][0]["label"] = old == "3" ? "4" : "3";
  auto cert = verify_document(bad);
  CHECK_FALSE(cert.pass());
  bool named = false;
  for (const auto& chk : cert.checks)
    if (chk.name == "declared-flows" && !chk.pass &&
        chk.detail.find("vertex") != std::string::npos)
      named = true;
  CHECK(named);
}

TEST_CASE("oracle documents embed their partitions") {
  Group g({9});
  auto out = oracle_partition(g, {3, 3}, {{0}});
  json doc = oracle_json(g, out);
  std::string why;
  CHECK_MESSAGE(schema_ok(load_schema("oracle.schema.json"), doc, why), why);
  CHECK(verify_document(doc).pass());

  Group cube({2, 2, 2});
  auto neg = oracle_partition(cube, {6}, {});
  json ndoc = oracle_json(cube, neg);
  CHECK(ndoc["verdict"] == "infeasible");
  CHECK_MESSAGE(schema_ok(load_schema("oracle.schema.json"), ndoc, why), why);
  CHECK(verify_document(ndoc).pass());
}

TEST_CASE("cross validation entries serialize compactly") {
  auto rep = cross_validate(Group({12}), SizeDemand{{5, 5}});
  json e = cross_json(rep);
  CHECK(e["group"] == "Z12");
  CHECK(e["theorem"] == "feasible");
  CHECK(e["oracle"] == "feasible");
  CHECK(e["disagreement"] == false);
}
