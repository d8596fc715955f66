#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "wls/algebra.hpp"
#include "wls/ccrel.hpp"
#include "wls/errors.hpp"

using namespace wls;
using namespace wls::test;

namespace {

using D = Designation;

constexpr std::string_view kNs =
  R"(<div xmlns:cc="http://creativecommons.org/ns#" xmlns:dc="http://purl.org/dc/elements/1.1/")";

std::string random_text()
{
  static const std::vector<std::string> pieces = {
    "a", "b", "Z", " ", "0", "&", "<", ">", "\"", "'", "=", "/", ";", "#", "-", ":", "?",
    "&amp;", "\xC3\xA9", "\xE2\x82\xAC",
  };
  std::uniform_int_distribution<std::size_t> len(0, 16);
  std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
  std::string out;
  for (auto n = len(rng()); n > 0; --n)
    out += pieces[pick(rng())];
  return out;
}

}  // namespace

TEST_SUITE("uri mapping")
{
  TEST_CASE("canonical URIs resolve to their designation")
  {
    for (auto d : kAllDesignations)
      CHECK(designation_from_uri(canonical_uri(d)) == d);
  }

  TEST_CASE("examples")
  {
    CHECK(designation_from_uri("http://creativecommons.org/publicdomain/zero/1.0/") == D::CC0);
    CHECK(designation_from_uri("urn:wls:license:arr") == D::ARR);
    CHECK(designation_from_uri("https://creativecommons.org/licenses/by-sa/2.5/") == D::BY_SA);
  }

  TEST_CASE("version, scheme and suffix tolerance")
  {
    CHECK(designation_from_uri("https://creativecommons.org/licenses/by-nc/4.0/") == D::BY_NC);
    CHECK(designation_from_uri("http://creativecommons.org/licenses/by-nc-nd/3.0/us/") ==
          D::BY_NC_ND);
    CHECK(designation_from_uri("http://creativecommons.org/licenses/by/4.0/legalcode") == D::BY);
    CHECK(designation_from_uri("https://www.creativecommons.org/licenses/by-nd/2.0") == D::BY_ND);
    CHECK(designation_from_uri("http://creativecommons.org/licenses/by-nd-nc/1.0/") ==
          D::BY_NC_ND);
    CHECK(designation_from_uri("  HTTP://CreativeCommons.org/licenses/BY-NC-SA/3.0/  ") ==
          D::BY_NC_SA);
    CHECK(designation_from_uri("http://creativecommons.org/publicdomain/mark/1.0/deed.en") ==
          D::PD);
  }

  TEST_CASE("unknown URIs carry the offending text")
  {
    for (std::string uri : {"http://example.org/my-eula",
                            "http://creativecommons.org/licenses/by-xx/3.0/",
                            "http://creativecommons.org/licenses/by/",
                            "http://creativecommons.org/licenses/by/three/",
                            "http://evil.org/licenses/by/3.0/", "urn:wls:license:gpl", ""}) {
      CAPTURE(uri);
      try {
        designation_from_uri(uri);
        FAIL("expected UnknownLicenseUri");
      } catch (const UnknownLicenseUri& e) {
        CHECK(e.uri() == uri);
        CHECK(e.kind() == CodecError::Kind::UnknownLicenseUri);
      }
    }
  }
}

TEST_SUITE("emit_ccrel")
{
  TEST_CASE("title only")
  {
    auto doc = LicenseDocument::for_designation(D::BY_NC);
    doc.title = "roads";
    CHECK(emit_ccrel(doc) ==
          std::string(kNs) + ">\n" +
            R"(<span property="dc:title">roads</span> is licensed under <a rel="license" href="http://creativecommons.org/licenses/by-nc/3.0/">CC BY-NC 3.0</a>.)" +
            "\n</div>\n");
  }

  TEST_CASE("no optional fields")
  {
    const auto text = emit_ccrel(LicenseDocument::for_designation(D::NL));
    CHECK(text == std::string(kNs) + ">\n" +
                    R"(This work is licensed under <a rel="license" href="urn:wls:license:nl">No License</a>.)" +
                    "\n</div>\n");
  }

  TEST_CASE("golden fragments, one per designation")
  {
    for (auto d : kAllDesignations) {
      CAPTURE(code(d));
      auto doc = LicenseDocument::for_designation(d);
      doc.work_uri = "http://example.org/data/" + std::string(code(d));
      for (auto& c : *doc.work_uri)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      doc.title = std::string(code(d)) + " roads & rails";
      doc.attribution_name = "Example <Mapping> Co.";
      doc.attribution_url = "http://example.org/";
      const auto golden =
        read_file(std::string(WLS_GOLDEN_DIR) + "/ccrel/" + std::string(code(d)) + ".lic");
      CHECK(emit_ccrel(doc) == golden);
      CHECK(emit_ccrel(doc) == emit_ccrel(doc));
    }
  }

  TEST_CASE("non-CC designations never carry attribution markup")
  {
    for (auto d : {D::PD, D::CC0, D::ARR, D::NL}) {
      auto doc = LicenseDocument::for_designation(d);
      doc.attribution_name = "Someone";
      doc.attribution_url = "http://example.org/";
      const auto text = emit_ccrel(doc);
      CHECK(text.find("attribution") == std::string::npos);
    }
  }

  TEST_CASE("partial attribution")
  {
    auto doc = LicenseDocument::for_designation(D::BY);
    doc.attribution_name = "Ann";
    CHECK(emit_ccrel(doc).find(R"( by <span property="cc:attributionName">Ann</span> is)") !=
          std::string::npos);
    doc.attribution_name.reset();
    doc.attribution_url = "http://a.example/";
    CHECK(emit_ccrel(doc).find(
            R"( by <a rel="cc:attributionURL" href="http://a.example/">http://a.example/</a> is)") !=
          std::string::npos);
  }

  TEST_CASE("incompatible fragment")
  {
    CHECK(emit_incompatible_ccrel() ==
          std::string(kNs) + ">\nThis combination is incompatible (X).\n</div>\n");
  }
}

TEST_SUITE("parse_ccrel")
{
  TEST_CASE("round-trips the canonical fragment")
  {
    auto doc = LicenseDocument::for_designation(D::BY_NC);
    doc.title = "roads";
    const auto text = emit_ccrel(doc);
    const auto parsed = parse_ccrel(text);
    CHECK(parsed.designation == D::BY_NC);
    CHECK(parsed.title == "roads");
    CHECK_FALSE(parsed.work_uri);
    CHECK_FALSE(parsed.attribution_name);
    CHECK(parsed.raw_fragment == text);
  }

  TEST_CASE("property: round-trip over designations x optional-field presence")
  {
    int cases = 0;
    for (auto d : kAllDesignations) {
      for (unsigned mask = 0; mask < 16; ++mask) {
        for (int sample = 0; sample < 8; ++sample) {
          auto doc = LicenseDocument::for_designation(d);
          if (mask & 1) doc.work_uri = random_text();
          if (mask & 2) doc.title = random_text();
          if (mask & 4) doc.attribution_name = random_text();
          if (mask & 8) doc.attribution_url = random_text();
          const auto parsed = parse_ccrel(emit_ccrel(doc));
          CAPTURE(emit_ccrel(doc));
          if (!is_cc_license(d)) {
            doc.attribution_name.reset();
            doc.attribution_url.reset();
          }
          CHECK(parsed.same_content(doc));
          ++cases;
        }
      }
    }
    CHECK(cases == 12 * 16 * 8);
  }

  TEST_CASE("version-tolerant license link")
  {
    const auto doc = parse_ccrel(
      R"(<a rel="license" href="https://creativecommons.org/licenses/by-nc/4.0/">CC BY-NC 4.0</a>)");
    CHECK(doc.designation == D::BY_NC);
    CHECK(doc.license_uri == "https://creativecommons.org/licenses/by-nc/4.0/");
  }

  TEST_CASE("chooser-style markup with extra elements")
  {
    const std::string chooser =
      "\xEF\xBB\xBF<!-- copied from the chooser -->\n"
      R"(<a rel="license" href="http://creativecommons.org/licenses/by-sa/3.0/"><img alt="Creative Commons License" style="border-width:0" src="http://i.creativecommons.org/l/by-sa/3.0/88x31.png" /></a><br />)"
      R"(<span xmlns:dct="http://purl.org/dc/terms/" href="http://purl.org/dc/dcmitype/Dataset" property="dc:title" rel="dct:type">Roads &amp; Rails</span> by )"
      R"(<a xmlns:cc="http://creativecommons.org/ns#" href="http://example.org/" property="cc:attributionName" rel="cc:attributionURL">Ex<b>ample</b></a>)"
      " is licensed under a <a rel=\"license\" href=\"http://creativecommons.org/licenses/by/3.0/\">second link</a>.<br>\n";
    const auto doc = parse_ccrel(chooser);
    CHECK(doc.designation == D::BY_SA);  // first rel=license wins
    CHECK(doc.title == "Roads & Rails");
    CHECK(doc.attribution_name == "Example");
    CHECK(doc.attribution_url == "http://example.org/");
    CHECK_FALSE(doc.work_uri);
  }

  TEST_CASE("about is taken from the outermost element only")
  {
    const auto doc = parse_ccrel(
      R"(<div about="urn:a"><p about="urn:b"><a rel="license" href="urn:wls:license:nl">x</a></p></div>)");
    CHECK(doc.work_uri == "urn:a");
  }

  TEST_CASE("content attribute and rel token lists")
  {
    const auto doc = parse_ccrel(
      R"(<div><meta property="dc:title" content="T &amp; U"/><a rel="nofollow license" href='urn:wls:license:by-nd-sa'>x</a></div>)");
    CHECK(doc.title == "T & U");
    CHECK(doc.designation == D::BY_ND_SA);
  }

  TEST_CASE("errors")
  {
    CHECK_THROWS_AS(parse_ccrel("<div>no license here</div>"), MissingLicense);
    CHECK_THROWS_AS(parse_ccrel(""), MissingLicense);

    try {
      parse_ccrel(R"(<a rel="license" href="http://example.org/my-eula">eula</a>)");
      FAIL("expected UnknownLicenseUri");
    } catch (const UnknownLicenseUri& e) {
      CHECK(e.uri() == "http://example.org/my-eula");
    }

    try {
      parse_ccrel(R"(<div><span>text</div>)");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 15);
    }

    try {
      parse_ccrel(R"(<div><a rel="license href=x>)");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 8);
    }

    CHECK_THROWS_AS(parse_ccrel("<div>"), ParseError);
    CHECK_THROWS_AS(parse_ccrel("</div>"), ParseError);
    CHECK_THROWS_AS(parse_ccrel("<div <"), ParseError);
    CHECK_THROWS_AS(parse_ccrel("<!-- open"), ParseError);
    CHECK_THROWS_AS(parse_ccrel("< div>"), ParseError);
  }

  TEST_CASE("fuzz: arbitrary bytes yield a document or a codec error")
  {
    std::uniform_int_distribution<int> byte(0, 255);
    std::uniform_int_distribution<std::size_t> len(0, 64);
    const std::string seed = emit_ccrel(LicenseDocument::for_designation(D::BY));
    std::uniform_int_distribution<std::size_t> at(0, seed.size() - 1);
    int parsed = 0;
    for (int i = 0; i < 20000; ++i) {
      std::string input;
      if (i % 2 == 0) {
        for (auto n = len(rng()); n > 0; --n)
          input += static_cast<char>(byte(rng()));
      } else {
        input = seed;
        for (int k = 0; k < 3; ++k)
          input[at(rng())] = static_cast<char>(byte(rng()));
      }
      try {
        parse_ccrel(input);
        ++parsed;
      } catch (const CodecError&) {
      }
    }
    CHECK(parsed > 0);
  }
}

TEST_SUITE("xml escaping")
{
  TEST_CASE("escape and unescape")
  {
    CHECK(xml_escape(R"(a&b<c>d"e'f)") == "a&amp;b&lt;c&gt;d&quot;e'f");
    CHECK(xml_unescape("a&amp;b&lt;c&gt;d&quot;e&apos;f") == "a&b<c>d\"e'f");
    CHECK(xml_unescape("&#233;&#x20AC;") == "\xC3\xA9\xE2\x82\xAC");
    CHECK(xml_unescape("&bogus; & &#xZZ; &#0;") == "&bogus; & &#xZZ; &#0;");
  }

  TEST_CASE("property: unescape inverts escape")
  {
    for (int i = 0; i < 2000; ++i) {
      const auto text = random_text();
      CHECK(xml_unescape(xml_escape(text)) == text);
    }
  }
}
