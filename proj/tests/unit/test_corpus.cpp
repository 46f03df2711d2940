#include <set>
#include <sstream>
#include <string>

#include "coauthor/corpus.hpp"
#include "coauthor/error.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace coauthor;

TEST_SUITE("corpus") {

TEST_CASE("names are trimmed, collapsed and composed") {
  CHECK(normalize_name("  Edward  A. Fox ") == "Edward A. Fox");
  CHECK(normalize_name("Hsinchun Chen") == "Hsinchun Chen");
  // "A" written as an escape, then a decomposed a + combining acute.
  const std::string decomposed = "J.\u0041lfredo Sa\xCC\x81nchez";
  const std::string composed = "J.Alfredo S\xC3\xA1nchez";
  CHECK(decomposed != composed);
  CHECK(normalize_name(decomposed) == composed);
  CHECK(normalize_name("\t\n ") == "");
  CHECK(normalize_name("A  B") == "A B");
}

TEST_CASE("folding ignores case and composition") {
  CHECK(fold_name("EDWARD a. fox") == fold_name("Edward A. Fox"));
  CHECK(fold_name("SA\xCC\x81NCHEZ") == fold_name("S\xC3\xA1nchez"));
  CHECK(fold_name("Fox") != fold_name("Fax"));
}

TEST_CASE("two-article corpus") {
  const auto c = test::parse(test::kTwoArticles);
  REQUIRE(c.publications.size() == 2);
  CHECK(c.authors.size() == 3);
  CHECK(c.publications[0].id == "article-1");
  CHECK(c.publications[0].authors.size() == 3);
  CHECK(c.publications[1].year == 2002);
  CHECK(c.report.records == 2);
}

TEST_CASE("empty stream gives an empty corpus") {
  const auto c = test::parse("");
  CHECK(c.publications.empty());
  CHECK(c.authors.size() == 0);
  CHECK(test::parse("\n\n  \n").publications.empty());
}

TEST_CASE("repeated names within a byline are dropped and counted") {
  const auto c = test::parse(R"({"id":"a","year":2000,"authors":["X","X"]})");
  REQUIRE(c.publications.size() == 1);
  CHECK(c.publications[0].authors.size() == 1);
  CHECK(c.report.duplicate_authors == 1);
  // Same name up to whitespace/composition is the same author.
  const auto d = test::parse(R"({"id":"a","year":2000,"authors":["S\u00e1nchez"," Sa\u0301nchez"]})");
  CHECK(d.publications[0].authors.size() == 1);
}

TEST_CASE("records without usable authors are rejected and counted") {
  const auto c = test::parse(
      R"({"id":"a","year":2000,"authors":[]})"
      "\n"
      R"({"id":"b","year":2000,"authors":["  ",""]})"
      "\n"
      R"({"id":"c","year":2000,"authors":["Z"]})");
  CHECK(c.publications.size() == 1);
  CHECK(c.report.rejected_records == 2);
  CHECK(c.report.empty_names == 2);
}

TEST_CASE("malformed input names the line") {
  auto line_of = [](const std::string& text) -> std::string {
    try {
      test::parse(text);
    } catch (const ParseError& e) {
      return e.what();
    }
    return "no error";
  };
  const std::string ok = R"({"id":"a","year":2000,"authors":["A"]})";
  CHECK(line_of(ok + "\n{not json") .find("line 2") != std::string::npos);
  CHECK(line_of(ok + "\n\n" + R"({"year":2000,"authors":["A"]})").find("line 3") != std::string::npos);
  CHECK(line_of(R"({"id":"a","year":0,"authors":["A"]})").find("line 1") != std::string::npos);
  CHECK(line_of(R"({"id":"a","year":2000,"authors":"A"})") != "no error");
  CHECK(line_of(R"({"id":"a","year":2000,"authors":[3]})") != "no error");
  CHECK(line_of(R"([1,2])") != "no error");
  CHECK(line_of(ok + "\n" + ok).find("duplicate publication id") != std::string::npos);
  CHECK_THROWS_AS(test::parse("{"), InputError);
}

TEST_CASE("ids follow name order whatever the line order") {
  const std::string a = R"({"id":"p1","year":2001,"authors":["Zed","Amy"]})";
  const std::string b = R"({"id":"p0","year":2000,"authors":["Bob","Amy"]})";
  const auto x = test::parse(a + "\n" + b);
  const auto y = test::parse(b + "\n" + a);
  REQUIRE(x.authors.size() == 3);
  for (AuthorId id = 0; id < 3; ++id) CHECK(x.authors.name(id) == y.authors.name(id));
  CHECK(x.authors.name(0) == "Amy");
  CHECK(x.authors.name(2) == "Zed");
  CHECK(x.publications[0].id == "p0");
  CHECK(x.publications[1].authors == y.publications[1].authors);
  // byline order is kept
  CHECK(x.publications[1].authors == std::vector<AuthorId>{2, 0});
}

TEST_CASE("interning is a bijection") {
  AuthorTable t;
  std::set<std::string> names{"a", "b", "Sánchez", "c d"};
  for (const auto& n : names) t.intern(n);
  for (const auto& n : names) t.intern(n);
  CHECK(t.size() == names.size());
  for (const auto& n : names) CHECK(t.name(*t.find(n)) == n);
  for (AuthorId id = 0; id < t.size(); ++id) CHECK(*t.find(t.name(id)) == id);
  CHECK_FALSE(t.find("nobody").has_value());
}

TEST_CASE("affiliations attach lower-case countries") {
  auto c = test::parse(test::kTwoArticles);
  std::istringstream aff(
      R"({"author":"v1","country":"US","affiliation":"Lab"})"
      "\n"
      R"({"author":" v2 ","country":".uk"})"
      "\n"
      R"({"author":"ghost","country":"de"})"
      "\n"
      R"({"author":"v3","country":null})");
  const auto rep = load_affiliations(aff, c.authors);
  CHECK(rep.applied == 3);
  CHECK(rep.unknown_authors == 1);
  CHECK(c.authors.meta(0).country == "us");
  CHECK(c.authors.meta(0).affiliation == "Lab");
  CHECK(c.authors.meta(1).country == "uk");
  CHECK_FALSE(c.authors.meta(2).country.has_value());

  std::istringstream bad(R"({"country":"us"})");
  CHECK_THROWS_AS(load_affiliations(bad, c.authors), ParseError);
}

TEST_CASE("statistics of the two-article corpus") {
  auto c = test::parse(test::kTwoArticles);
  std::istringstream aff(R"({"author":"v1","country":"us"})" "\n" R"({"author":"v2","country":"jp"})");
  load_affiliations(aff, c.authors);
  const auto s = corpus_stats(c.publications, c.authors);
  CHECK(s.total_publications == 2);
  CHECK(s.total_authors == 3);
  CHECK(s.mean_authors_per_paper == doctest::Approx(2.5));
  CHECK(s.median_authors_per_paper == doctest::Approx(2.5));
  CHECK(s.authors_per_paper == std::map<std::size_t, std::size_t>{{2, 1}, {3, 1}});
  CHECK(s.publication_counts == std::vector<std::size_t>{2, 2, 1});
  CHECK(s.papers_per_author == std::map<std::size_t, std::size_t>{{1, 1}, {2, 2}});
  CHECK(s.per_year.at(2001).new_authors == 3);
  CHECK(s.per_year.at(2002).new_authors == 0);
  CHECK(s.per_year.at(2002).authors == 2);
  CHECK(s.per_year.at(2001).international_authors == 1);
  CHECK(s.per_year.at(2001).unknown_country_authors == 1);
  CHECK(s.authors_per_country.at(std::string(kUnknownCountry)) == 1);
  CHECK(s.authors_per_country.at("us") == 1);
  CHECK_THROWS_AS(corpus_stats({}, c.authors), DomainError);
}

TEST_CASE("statistics invariants on the synthetic corpus") {
  std::mt19937_64 rng(3);
  std::string text;
  std::uniform_int_distribution<int> f(1, 6), who(0, 29), year(1995, 2004);
  for (int p = 0; p < 200; ++p) {
    text += "{\"id\":\"p" + std::to_string(p) + "\",\"year\":" + std::to_string(year(rng)) +
            ",\"authors\":[";
    for (int k = f(rng); k > 0; --k) text += "\"a" + std::to_string(who(rng)) + "\"" + (k > 1 ? "," : "");
    text += "]}\n";
  }
  const auto c = test::parse(text);
  const auto s = corpus_stats(c.publications, c.authors);
  std::size_t byline_total = 0, hist_total = 0, new_total = 0, count_total = 0;
  for (const auto& p : c.publications) byline_total += p.author_count();
  for (auto [bucket, n] : s.authors_per_paper) hist_total += bucket * n;
  for (const auto& [y, ys] : s.per_year) new_total += ys.new_authors;
  for (auto n : s.publication_counts) count_total += n;
  CHECK(hist_total == byline_total);
  CHECK(count_total == byline_total);
  CHECK(new_total == s.total_authors);
  std::size_t country_total = 0;
  for (const auto& [k, n] : s.authors_per_country) country_total += n;
  CHECK(country_total == s.total_authors);
}

}
