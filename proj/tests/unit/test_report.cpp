#include "doctest.h"
#include "monideal/error.hpp"
#include "monideal/report.hpp"
#include "monideal/verify.hpp"
#include "oracles.hpp"

using namespace monideal;

TEST_SUITE("reports") {
    TEST_CASE("digest is FNV-1a") {
        CHECK(digest("") == "cbf29ce484222325");
        CHECK(digest("a") == "af63dc4c8601ec8c");
    }

    TEST_CASE("verdicts and serialization") {
        RunReport r;
        r.command = "demo";
        r.add("one", true);
        r.add("two", Status::not_applicable, "skipped");
        CHECK_FALSE(r.any_failed());
        r.add("three", false, "counterexample");
        CHECK(r.any_failed());
        const auto j = nlohmann::json::parse(r.to_json());
        CHECK(j["verdicts"].size() == 3);
        CHECK(j["verdicts"][1]["status"] == "na");
        CHECK_FALSE(j.contains("timing_ms"));
        r.timing_ms = 1.5;
        CHECK(nlohmann::json::parse(r.to_json()).contains("timing_ms"));
    }

    TEST_CASE("config files") {
        Config c;
        apply_config(c, "# caps\nfield = p:2\n\ntaylor_max_generators = 9\n");
        CHECK(c.field == Field::prime(2));
        CHECK(c.limits.taylor_max_generators == 9);
        CHECK(c.warnings.size() == 1);
        Config d;
        CHECK_THROWS_AS(apply_config(d, "colour = blue\n"), ParseError);
        CHECK_THROWS_AS(apply_config(d, "shelling_cutoff = many\n"), ParseError);
        CHECK_THROWS_AS(apply_config(d, "field = p:4\n"), ParseError);
    }

    TEST_CASE("verify-all on the three-component ideal") {
        const Config c;
        const auto r = verify_all(three_component_ideal(), c);
        CHECK_FALSE(r.any_failed());
        CHECK(r.data["decomposition"].size() == 3);
        CHECK(r.to_json() == verify_all(three_component_ideal(), c).to_json());
        bool saw_coscarf = false;
        for (const auto& v : r.verdicts) saw_coscarf = saw_coscarf || v.check == "co-scarf-resolves";
        CHECK(saw_coscarf);
    }

    TEST_CASE("verify-all finds nothing wrong on fixtures") {
        const Config c;
        for (const auto& f : fixtures()) {
            const auto r = verify_all(f.ideal, c);
            for (const auto& v : r.verdicts) CHECK_MESSAGE(v.status != Status::fail, (f.name + ": " + v.check + " " + v.witness));
        }
    }

    TEST_CASE("corpus runs are reproducible") {
        CorpusParams p;
        p.count = 30;
        const Config c;
        const auto a = verify_corpus(CorpusKind::any, 7, p, c);
        const auto b = verify_corpus(CorpusKind::any, 7, p, c);
        CHECK(a.to_json() == b.to_json());
        CHECK(a.data["count"] == 30);
        CHECK(a.to_json() != verify_corpus(CorpusKind::any, 8, p, c).to_json());
    }
}
