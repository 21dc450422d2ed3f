#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "qlsat/certificate.hpp"

using namespace qlsat;

namespace {

const char* kSep1Text = "(p0 & (p1 | p2)) & ~((p0 & p1) | (p0 & p2))";

Subspace<Rational> line(const std::vector<int>& coords) {
    Matrix<Rational> col(static_cast<int>(coords.size()), 1);
    for (int i = 0; i < col.rows(); ++i) col.at(i, 0) = coords[i];
    return Subspace<Rational>::span_columns(col);
}

Projector<Rational> diag(const std::vector<int>& bits) {
    Matrix<Rational> m(static_cast<int>(bits.size()), static_cast<int>(bits.size()));
    for (int i = 0; i < m.rows(); ++i) m.at(i, i) = bits[i];
    return Projector<Rational>::from_matrix(std::move(m));
}

StdValuation<Rational> separator_witness() {
    return {{0, line({1, 1})}, {1, line({1, 0})}, {2, line({0, 1})}};
}

// Replaces the first occurrence of a substring; the tests use it to
// corrupt documents the way a negative control would.
std::string replaced(std::string doc, const std::string& from, const std::string& to) {
    auto pos = doc.find(from);
    REQUIRE(pos != std::string::npos);
    return doc.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("canonical text of a small commuting-projector certificate", "[certificate]") {
    ProjValuation<Rational> v{{0, diag({1, 0})}, {1, diag({0, 1})}};
    Certificate<Rational> c = make_com_certificate(parse("p0 | p1"), 2, v);

    CHECK(serialize_certificate(c) ==
          "qlsat-certificate 1\n"
          "formula p0 | p1\n"
          "semantics COM\n"
          "field RAT\n"
          "dim 2\n"
          "verdict SAT\n"
          "atoms 2\n"
          "atom 0 2 2\n"
          "1 0\n"
          "0 0\n"
          "atom 1 2 2\n"
          "0 0\n"
          "0 1\n"
          "value 2 2\n"
          "1 0\n"
          "0 1\n");
}

TEST_CASE("serialize, parse, serialize is byte-identical", "[certificate]") {
    std::vector<std::string> docs;
    docs.push_back(
        serialize_certificate(make_std_certificate(parse(kSep1Text), 2, separator_witness())));
    docs.push_back(serialize_certificate(make_com_certificate(
        parse("p0 | p1"), 2, ProjValuation<Rational>{{0, diag({1, 0})}, {1, diag({0, 1})}})));
    docs.push_back(serialize_certificate(make_pba_certificate(
        parse(kSep1Text), 2, std_valuation_to_proj(separator_witness()))));
    docs.push_back(serialize_certificate(make_std_certificate(
        parse("p0 & p0"), 1, StdValuation<Rational>{{0, Subspace<Rational>::zero(1)}})));

    for (const std::string& doc : docs) {
        Certificate<Rational> c = parse_certificate<Rational>(doc);
        CHECK(serialize_certificate(c) == doc);
    }
}

TEST_CASE("gaussian certificates round-trip and carry the GAUSS tag", "[certificate]") {
    Matrix<Gaussian> col(2, 1);
    col.at(0, 0) = Gaussian(1);
    col.at(1, 0) = Gaussian(Rational(0), Rational(1));
    StdValuation<Gaussian> v{{0, Subspace<Gaussian>::span_columns(col)}};

    std::string doc = serialize_certificate(make_std_certificate(parse("p0"), 2, v));
    CHECK(certificate_field(doc) == FieldTag::Gauss);
    CHECK(doc.find("field GAUSS\n") != std::string::npos);

    Certificate<Gaussian> c = parse_certificate<Gaussian>(doc);
    CHECK(serialize_certificate(c) == doc);
    CHECK(verify_certificate(c).pass);

    CHECK_THROWS_AS(parse_certificate<Rational>(doc), field_mismatch);
}

TEST_CASE("builders emit certificates that verify", "[certificate]") {
    Formula sep1 = parse(kSep1Text);

    SECTION("subspace witness in dimension 2") {
        Certificate<Rational> c = make_std_certificate(sep1, 2, separator_witness());
        CHECK(c.verdict == CertVerdict::Sat);
        VerifyReport r = verify_certificate(c);
        CHECK(r.pass);
        CHECK(r.detail == "ok");
    }

    SECTION("subspace witness embedded in dimension 3") {
        StdValuation<Rational> v{
            {0, line({1, 1, 0})}, {1, line({1, 0, 0})}, {2, line({0, 1, 0})}};
        Certificate<Rational> c = make_std_certificate(sep1, 3, v);
        CHECK(c.verdict == CertVerdict::Sat);
        CHECK(verify_certificate(c).pass);
    }

    SECTION("commuting diagonal witness") {
        ProjValuation<Rational> v{{0, diag({1, 0})}, {1, diag({0, 1})}};
        Certificate<Rational> c = make_com_certificate(parse("p0 | p1"), 2, v);
        CHECK(c.verdict == CertVerdict::Sat);
        CHECK(verify_certificate(c).pass);
    }

    SECTION("undefinedness evidence under the non-commuting triple") {
        Certificate<Rational> c =
            make_pba_certificate(sep1, 2, std_valuation_to_proj(separator_witness()));
        CHECK(c.verdict == CertVerdict::Undefined);
        REQUIRE(c.blame.has_value());
        CHECK(path_to_text(*c.blame) == "R.C.L");
        REQUIRE(c.left_block.has_value());
        REQUIRE(c.right_block.has_value());
        CHECK(verify_certificate(c).pass);

        // The round trip preserves the evidence blocks.
        Certificate<Rational> back =
            parse_certificate<Rational>(serialize_certificate(c));
        CHECK(verify_certificate(back).pass);
    }

    SECTION("unsatisfied claims are emitted as UNSAT and verify too") {
        StdValuation<Rational> v{{0, line({1, 0})}};
        Certificate<Rational> c = make_std_certificate(parse("p0 & ~p0"), 2, v);
        CHECK(c.verdict == CertVerdict::Unsat);
        CHECK(verify_certificate(c).pass);
    }
}

TEST_CASE("negative controls name the first violated invariant", "[certificate]") {
    Formula sep1 = parse(kSep1Text);
    std::string std_doc =
        serialize_certificate(make_std_certificate(sep1, 2, separator_witness()));
    std::string com_doc = serialize_certificate(make_com_certificate(
        parse("p0 | p1"), 2, ProjValuation<Rational>{{0, diag({1, 0})}, {1, diag({0, 1})}}));
    std::string pba_doc = serialize_certificate(
        make_pba_certificate(sep1, 2, std_valuation_to_proj(separator_witness())));

    SECTION("flipped verdict") {
        auto c = parse_certificate<Rational>(replaced(std_doc, "verdict SAT", "verdict UNSAT"));
        VerifyReport r = verify_certificate(c);
        CHECK_FALSE(r.pass);
        CHECK(r.detail == "verdict mismatch");
    }

    SECTION("matrix that is not idempotent") {
        auto c = parse_certificate<Rational>(
            replaced(com_doc, "atom 0 2 2\n1 0", "atom 0 2 2\n1/2 0"));
        VerifyReport r = verify_certificate(c);
        CHECK_FALSE(r.pass);
        CHECK(r.detail == "projector invariant violated at atom p0");
    }

    SECTION("claimed value differs from the recomputed one") {
        auto c = parse_certificate<Rational>(replaced(std_doc, "value 2 1\n1\n1", "value 2 1\n1\n0"));
        VerifyReport r = verify_certificate(c);
        CHECK_FALSE(r.pass);
        CHECK(r.detail == "value mismatch");
    }

    SECTION("dependent basis columns") {
        auto c = parse_certificate<Rational>(
            replaced(std_doc, "atom 1 2 1\n1\n0", "atom 1 2 2\n1 2\n0 0"));
        VerifyReport r = verify_certificate(c);
        CHECK_FALSE(r.pass);
        CHECK(r.detail == "basis columns dependent at atom p1");
    }

    SECTION("non-commuting atoms under the global semantics") {
        ProjValuation<Rational> tilted = std_valuation_to_proj(separator_witness());
        Certificate<Rational> c;
        c.formula = parse("p0 & p1");
        c.semantics = Semantics::Com;
        c.dimension = 2;
        c.verdict = CertVerdict::Unsat;
        for (const auto& [index, proj] : tilted) c.atom_blocks.emplace(index, proj.matrix());
        VerifyReport r = verify_certificate(c);
        CHECK_FALSE(r.pass);
        CHECK(r.detail == "atoms not admissible: p0 and p1 do not commute");
    }

    SECTION("wrong blame path") {
        auto c = parse_certificate<Rational>(replaced(pba_doc, "blame R.C.L", "blame L.C.L"));
        VerifyReport r = verify_certificate(c);
        CHECK_FALSE(r.pass);
        CHECK(r.detail == "blame mismatch");
    }

    SECTION("tampered evidence block") {
        auto c = parse_certificate<Rational>(pba_doc);
        c.left_block = Matrix<Rational>::identity(2);
        VerifyReport r = verify_certificate(c);
        CHECK_FALSE(r.pass);
        CHECK(r.detail == "evidence mismatch");
    }

    SECTION("undefinedness claimed for a defined outcome") {
        ProjValuation<Rational> v{{0, diag({1, 0})}, {1, diag({0, 1})}};
        Certificate<Rational> c = make_pba_certificate(parse("p0 | p1"), 2, v);
        c.verdict = CertVerdict::Undefined;
        VerifyReport r = verify_certificate(c);
        CHECK_FALSE(r.pass);
        CHECK(r.detail == "verdict mismatch");
    }
}

TEST_CASE("structural problems throw instead of failing", "[certificate]") {
    Formula sep1 = parse(kSep1Text);
    Certificate<Rational> c = make_std_certificate(sep1, 2, separator_witness());

    SECTION("missing atom block") {
        c.atom_blocks.erase(2);
        CHECK_THROWS_AS(verify_certificate(c), missing_atom_error);
    }

    SECTION("block shape contradicts the declared dimension") {
        c.dimension = 3;
        CHECK_THROWS_AS(verify_certificate(c), dimension_mismatch);
    }
}

TEST_CASE("parser rejects malformed documents", "[certificate]") {
    std::string good = serialize_certificate(make_com_certificate(
        parse("p0 | p1"), 2, ProjValuation<Rational>{{0, diag({1, 0})}, {1, diag({0, 1})}}));

    auto reject = [](const std::string& doc) {
        CHECK_THROWS_AS(parse_certificate<Rational>(doc), certificate_error);
    };

    reject("");
    reject(replaced(good, "qlsat-certificate 1", "qlsat-certificate 2"));
    reject(replaced(good, "qlsat-certificate 1", "some other file"));
    reject(replaced(good, "formula p0 | p1", "formula p0 |"));
    reject(replaced(good, "semantics COM", "semantics XYZ"));
    reject(replaced(good, "verdict SAT", "verdict MAYBE"));
    reject(replaced(good, "dim 2", "dim 0"));
    reject(replaced(good, "dim 2", "dim -1"));
    reject(replaced(good, "atom 1 2 2", "atom 0 2 2"));       // duplicate index
    reject(replaced(good, "atom 0 2 2\n1 0\n0 0", "atom 0 2 2\n1 0\n0 0 7"));  // extra entry
    reject(good + "value 2 2\n1 0\n0 1\n");                   // duplicate value block
    reject(good + "left 2 2\n1 0\n0 1\n");                    // evidence outside PBA
    reject(good.substr(0, good.size() - 3));                  // truncated entries
    reject(replaced(good, "1 0\n0 0\natom 1", "1 0\n0 x\natom 1"));  // bad scalar

    // blame under a non-PBA tag
    reject(replaced(good, "verdict SAT\n", "verdict SAT\nblame -\n"));
}

TEST_CASE("parser tolerates loose whitespace, serializer restores canon", "[certificate]") {
    std::string good = serialize_certificate(make_com_certificate(
        parse("p0 | p1"), 2, ProjValuation<Rational>{{0, diag({1, 0})}, {1, diag({0, 1})}}));

    std::string loose = replaced(good, "atom 0 2 2\n1 0\n0 0\n", "atom 0 2 2\n\n  1   0 0\t0\n\n");
    Certificate<Rational> c = parse_certificate<Rational>(loose);
    CHECK(serialize_certificate(c) == good);
}

TEST_CASE("certificate_field peeks at the declared field", "[certificate]") {
    std::string good = serialize_certificate(make_com_certificate(
        parse("p0 | p1"), 2, ProjValuation<Rational>{{0, diag({1, 0})}, {1, diag({0, 1})}}));
    CHECK(certificate_field(good) == FieldTag::Rat);
    CHECK_THROWS_AS(certificate_field("qlsat-certificate 1\nformula p0\n"), certificate_error);
}
