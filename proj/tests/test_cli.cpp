#include <catch2/catch_amalgamated.hpp>

#include "cli_runner.hpp"

TEST_CASE("check: verdicts and exit codes") {
    auto t = cli::run("check -a 2 -d 5 -n 16");
    CHECK(t.status == 0);
    CHECK(t.out == "true\n");

    auto f = cli::run("check -a 3 -d 5 -n 16");
    CHECK(f.status == 1);
    CHECK(f.out == "false\n");

    auto one = cli::run("check -a 1 -d 1 -n 1");
    CHECK(one.status == 0);
    CHECK(one.out == "true\n");
}

TEST_CASE("check --explain prints the six verdicts and the witness range") {
    auto r = cli::run("check -a 2 -d 5 -n 16 --explain");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "true\n"
          "cutting: true\n"
          "covering: true\n"
          "intersection: true\n"
          "strong_remainder: true\n"
          "tipping_point: true\n"
          "reciprocal_duality: true\n"
          "cutting_lengths: (2, 3]\n");
    auto e = cli::run("check -a 1 -d 5 -n 12 --explain");
    CHECK(e.status == 1);
    CHECK(e.out.find("cutting_lengths: empty\n") != std::string::npos);
}

TEST_CASE("strict numeric flags") {
    CHECK(cli::run("check -a 002 -d 5 -n 16").status == 0);   // leading zeros allowed
    CHECK(cli::run("check -a +2 -d 5 -n 16").status == 2);
    CHECK(cli::run("check -a -2 -d 5 -n 16").status == 2);
    CHECK(cli::run("check -a 2.5 -d 5 -n 16").status == 2);
    CHECK(cli::run("check -a x -d 5 -n 16").status == 2);
    CHECK(cli::run("check -a 0 -d 5 -n 16").status == 2);
    CHECK(cli::run("check -d 5 -n 16").status == 2);          // missing -a
    CHECK(cli::run("nonsense").status == 2);
    CHECK(cli::run("check -a 2 -d 5 -n 16 --format yaml").status == 2);
}

TEST_CASE("interval listing") {
    CHECK(cli::run("interval -a 5 -d 1 -n 26").out == "1,2,13,26\n");
    CHECK(cli::run("interval -a 1 -d 9 -n 90").out == "9,18,45,90\n");
    CHECK(cli::run("interval -a 1 -d 1 -n 1").out == "1\n");
    CHECK(cli::run("interval -a 1 -d 5 -n 12").out == "empty\n");

    // total order on {1,2,13,26}: all 6 pairs incident
    auto rel = cli::run("interval -a 5 -d 1 -n 26 --relations");
    CHECK(rel.out ==
          "1,2,13,26\n"
          "1<=2\n"
          "1<=13\n"
          "1<=26\n"
          "2<=13\n"
          "2<=26\n"
          "13<=26\n");

    auto csv = cli::run("interval -a 5 -d 1 -n 26 --format csv");
    CHECK(csv.out == "element\n1\n2\n13\n26\n");

    auto json = cli::run("interval -a 5 -d 1 -n 26 --format json");
    CHECK(json.out == "{\"a\":5,\"d\":1,\"n\":26,\"elements\":[1,2,13,26]}\n");
}

TEST_CASE("scaling quadruple") {
    CHECK(cli::run("scaling -d 5 -n 15").out == "all\n");
    CHECK(cli::run("scaling -d 5 -n 16").out == "1..2\n");
    CHECK(cli::run("scaling -d 5 -n 17").out == "1..1\n");
    CHECK(cli::run("scaling -d 5 -n 18").out == "empty\n");
    CHECK(cli::run("scaling -d 5 -n 16 --format csv").out == "kind,bound\ninitial,2\n");
    CHECK(cli::run("scaling -d 5 -n 15 --format json").out ==
          "{\"d\":5,\"n\":15,\"kind\":\"all\",\"bound\":null}\n");
}

TEST_CASE("semigroup, sigma, moebius reports") {
    CHECK(cli::run("semigroup -a 1 -d 3").out == "generators: 3,7,11\nfrobenius: 8\ngenus: 5\n");
    CHECK(cli::run("semigroup -a 2 -d 4 --format csv").out ==
          "generators,frobenius,genus\n4;13;22;31,27,15\n");
    CHECK(cli::run("sigma -a 1 -d 3 -x 20").out == "15\n");
    CHECK(cli::run("sigma -a 2 -d 5 -x 0").out == "0\n");
    CHECK(cli::run("moebius -a 2 -d 1 -n 21").out == "2\n");
    CHECK(cli::run("moebius -a 6 -d 1 -n 13").out == "-1\n");
    CHECK(cli::run("moebius -a 1 -d 5 -n 12").out == "0\n");
}

TEST_CASE("overflow reports exit 3") {
    CHECK(cli::run("semigroup -a 1099511627776 -d 1048576").status == 3);
}

TEST_CASE("average report") {
    auto r = cli::run("average -a 1 -x 1");
    CHECK(r.status == 0);
    CHECK(r.out == "average: 1.000000\npredicted: 1.333333\nrelative_error: 0.250000\n");
}

TEST_CASE("survey output") {
    auto single = cli::run("survey -a 1 -N 1");
    CHECK(single.out ==
          "n,size_minus,size_plus,size_total,set_threshold,poset_threshold\n"
          "1,1,1,1,1,1\n");

    auto sizes = cli::run("survey -a 2 -N 10 --columns sizes");
    CHECK(sizes.out.rfind("n,size_minus,size_plus,size_total\n", 0) == 0);
    CHECK(sizes.out.find("\n10,3,3,5\n") != std::string::npos);   // Q_2[1,10] has 5 elements

    auto thr = cli::run("survey --thresholds -N 5");
    CHECK(thr.out ==
          "n,set_threshold,poset_threshold\n"
          "1,1,1\n2,1,1\n3,1,1\n4,1,1\n5,2,2\n");

    auto json = cli::run("survey -a 1 -N 2 --columns sizes --format json");
    CHECK(json.out ==
          "[{\"n\":1,\"size_minus\":1,\"size_plus\":1,\"size_total\":1},"
          "{\"n\":2,\"size_minus\":1,\"size_plus\":1,\"size_total\":2}]\n");
}

TEST_CASE("survey bytes are identical for any worker count") {
    auto serial = cli::run("survey -a 2 -N 240 --jobs 1");
    auto parallel = cli::run("survey -a 2 -N 240 --jobs 7");
    CHECK(serial.status == 0);
    CHECK(serial.out == parallel.out);

    auto sim1 = cli::run("survey -a 2 -N 60 --columns sizes --simulate-seed 42 --jobs 1");
    auto sim2 = cli::run("survey -a 2 -N 60 --columns sizes --simulate-seed 42 --jobs 4");
    CHECK(sim1.out == sim2.out);
    CHECK(sim1.out.rfind("n,size_minus,size_plus,size_total,sim_minus,sim_plus\n", 0) == 0);
}

TEST_CASE("soft caps and FLOORQ_MAX_X") {
    CHECK(cli::run("survey -a 1 -N 200000 --columns sizes").status == 2);        // default cap 1e5
    CHECK(cli::run("survey -a 1 -N 150 --columns sizes", "FLOORQ_MAX_X=100").status == 2);
    CHECK(cli::run("survey -a 1 -N 150 --columns sizes", "FLOORQ_MAX_X=150").status == 0);
    CHECK(cli::run("average -a 1 -x 2000000").status == 2);                      // default cap 1e6
    CHECK(cli::run("average -a 1 -x 50", "FLOORQ_MAX_X=40").status == 2);
    CHECK(cli::run("check -a 1 -d 1 -n 1", "FLOORQ_MAX_X=bogus").status == 2);
}
