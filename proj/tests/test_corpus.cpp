#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "focal/corpus.hpp"
#include "focal/errors.hpp"
#include "focal/group.hpp"
#include "focal/suite.hpp"
#include "focal/word.hpp"

using namespace focal;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    path = std::string("corpus_test_") +
           std::to_string(reinterpret_cast<uintptr_t>(this)) + ".grp";
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("classic families") {
  CHECK(symmetric_group(1).order() == 1);
  CHECK(symmetric_group(3).order() == 6);
  CHECK(symmetric_group(5).order() == 120);
  CHECK(alternating_group(4).order() == 12);
  CHECK(alternating_group(5).order() == 60);
  CHECK(alternating_group(6).order() == 360);
  CHECK(dihedral_group(4).order() == 8);
  CHECK(dihedral_group(10).order() == 20);
  CHECK(cyclic_group(1).order() == 1);
  CHECK(cyclic_group(12).order() == 12);
  CHECK(is_abelian(cyclic_group(12)));
  CHECK_FALSE(is_abelian(dihedral_group(3)));
  CHECK_THROWS_AS(symmetric_group(0), ParameterOutOfRange);
  CHECK_THROWS_AS(symmetric_group(8), ParameterOutOfRange);
  CHECK_THROWS_AS(alternating_group(8), ParameterOutOfRange);
  CHECK_THROWS_AS(dihedral_group(2), ParameterOutOfRange);
  CHECK_THROWS_AS(cyclic_group(0), ParameterOutOfRange);
}

TEST_CASE("alternating groups are the derived subgroups of symmetric ones") {
  for (int n = 3; n <= 5; ++n) {
    const FiniteGroup sn = symmetric_group(n);
    const Subgroup derived =
        commutator_subgroup(sn, full_subgroup(sn), full_subgroup(sn));
    const FiniteGroup an = alternating_group(n);
    CHECK(derived.order() == an.order());
    // Same permutations: every derived element lies in the rebuilt copy.
    for (Elem x : derived.elements())
      CHECK(an.index_of(sn.perm(x)).has_value());
  }
}

TEST_CASE("quaternion group") {
  const FiniteGroup q8 = quaternion_group8();
  CHECK(q8.order() == 8);
  int order2 = 0, order4 = 0;
  for (Elem x = 0; x < 8; ++x) {
    if (q8.element_order(x) == 2) ++order2;
    if (q8.element_order(x) == 4) ++order4;
  }
  CHECK(order2 == 1);  // only -1 is an involution
  CHECK(order4 == 6);
  CHECK(is_nilpotent(q8));
  CHECK_FALSE(is_abelian(q8));
  // Every subgroup is normal.
  for (Elem x = 0; x < 8; ++x)
    CHECK(is_normal(q8, subgroup_generated(q8, {x})));
}

TEST_CASE("special linear group SL(2,3)") {
  const FiniteGroup g = sl23_group();
  CHECK(g.order() == 24);
  // Unlike S4: a unique involution, and the derived subgroup is Q8.
  int involutions = 0;
  for (Elem x = 0; x < g.order(); ++x)
    if (g.element_order(x) == 2) ++involutions;
  CHECK(involutions == 1);
  const std::vector<Subgroup> mns = minimal_normal_subgroups(g);
  REQUIRE(mns.size() == 1u);
  CHECK(mns[0].order() == 2);
  CHECK(commutator_subgroup(g, full_subgroup(g), full_subgroup(g)).order() ==
        8);
}

TEST_CASE("projective special linear group PSL(2,7)") {
  const FiniteGroup g = psl27_group();
  CHECK(g.order() == 168);
  CHECK_FALSE(is_abelian(g));
  const std::vector<Subgroup> mns = minimal_normal_subgroups(g);
  REQUIRE(mns.size() == 1u);
  CHECK(mns[0].order() == 168);
}

TEST_CASE("direct products act on disjoint points") {
  const FiniteGroup g = direct_product(symmetric_group(3), cyclic_group(4));
  CHECK(g.order() == 24);
  CHECK(g.perm(g.identity()).degree() == 7);
  CHECK(direct_product(cyclic_group(2), cyclic_group(3)).order() == 6);
  CHECK(is_abelian(direct_product(cyclic_group(2), cyclic_group(3))));
  const FiniteGroup s3s3 = direct_product(symmetric_group(3),
                                          symmetric_group(3));
  CHECK(s3s3.order() == 36);
  CHECK(s3s3.name() == "S3xS3");
}

TEST_CASE("group files") {
  const TempFile good("# tiny example\ndegree 3\ngen (1 2)\ngen (1 2 3)\n");
  const FiniteGroup s3 = load_group_file(good.path);
  CHECK(s3.order() == 6);
  CHECK(s3.name() == "@" + good.path);

  const TempFile empty("degree 4\n");
  CHECK(load_group_file(empty.path).order() == 1);

  const TempFile bad_point("degree 4\ngen (1 2 5)\n");
  CHECK_THROWS_AS(load_group_file(bad_point.path), PointOutOfRange);

  const TempFile no_degree("gen (1 2)\n");
  CHECK_THROWS_AS(load_group_file(no_degree.path), FileFormatError);

  const TempFile junk("degree 3\nwidget (1 2)\n");
  CHECK_THROWS_AS(load_group_file(junk.path), FileFormatError);

  const TempFile twice("degree 3\ndegree 3\n");
  CHECK_THROWS_AS(load_group_file(twice.path), FileFormatError);

  CHECK_THROWS_AS(load_group_file("no_such_file_anywhere.grp"),
                  FileFormatError);
}

TEST_CASE("group arguments by name") {
  CHECK(build_group_argument("S4").order() == 24);
  CHECK(build_group_argument("s4").order() == 24);
  CHECK(build_group_argument(" a5 ").order() == 60);
  CHECK(build_group_argument("d6").order() == 12);
  CHECK(build_group_argument("c2xc2").order() == 4);
  CHECK(build_group_argument("q8").order() == 8);
  CHECK(build_group_argument("sl23").order() == 24);
  CHECK(build_group_argument("psl27").order() == 168);
  CHECK(build_group_argument("q8xs3").order() == 48);
  CHECK(build_group_argument("c2xc2xc2").order() == 8);
  CHECK_THROWS_AS(build_group_argument("frobnicate"), Error);
  CHECK_THROWS_AS(build_group_argument(""), Error);
  CHECK_THROWS_AS(build_group_argument("s4x"), Error);

  const TempFile f("degree 2\ngen (1 2)\n");
  CHECK(build_group_argument("@" + f.path).order() == 2);
}

TEST_CASE("the corpus manifest") {
  const std::vector<GroupDescriptor> corpus = default_corpus();
  REQUIRE(corpus.size() == 14u);
  const std::vector<std::string> names{
      "S3", "S4", "S5", "A4", "A5", "D4", "D5",
      "D6", "C2xC2", "C6", "Q8", "SL23", "S3xS3", "PSL27"};
  const std::vector<long> orders{6,  24, 120, 12, 60, 8,  10,
                                 12, 4,  6,   8,  24, 36, 168};
  for (size_t i = 0; i < corpus.size(); ++i) {
    CHECK(corpus[i].name == names[i]);
    const FiniteGroup g = corpus[i].build();
    CHECK(g.order() == orders[i]);
    REQUIRE(corpus[i].expected_order.has_value());
    CHECK(*corpus[i].expected_order == orders[i]);
    CHECK(g.order() <= kDefaultOrderCap);
  }
}

TEST_CASE("corpus filtering by order") {
  CHECK(corpus_groups(1000).size() == 14u);
  CHECK(corpus_groups(12).size() == 8u);
  CHECK(corpus_groups(3).empty());
  for (const FiniteGroup& g : corpus_groups(24)) CHECK(g.order() <= 24);
}

TEST_CASE("summary lines") {
  std::vector<VerificationReport> reports(3);
  reports[0].verdict = Verdict::holds;
  reports[1].verdict = Verdict::fails;
  reports[2].verdict = Verdict::inapplicable;
  CHECK(summary_line(reports) == "total=3 holds=1 fails=1 inapplicable=1");
  CHECK(summary_line({}) == "total=0 holds=0 fails=0 inapplicable=0");
}

TEST_CASE("corpus runs are deterministic across worker counts") {
  const std::vector<Word> words{gamma_word(2), gamma_word(3)};
  const SuiteOutput serial = corpus_run_output(12, words, 1);
  const SuiteOutput parallel = corpus_run_output(12, words, 4);
  CHECK(serial.text == parallel.text);
  CHECK(serial.fails == 0);
  CHECK(serial.errors.empty());
  CHECK(serial.text.find("total=") != std::string::npos);
}
