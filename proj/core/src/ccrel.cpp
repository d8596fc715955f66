#include "wls/ccrel.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <vector>

#include "wls/algebra.hpp"
#include "wls/errors.hpp"

namespace wls {

namespace {

constexpr std::string_view kDivOpen =
  R"(<div xmlns:cc="http://creativecommons.org/ns#" xmlns:dc="http://purl.org/dc/elements/1.1/")";

constexpr std::array<std::string_view, kDesignationCount> kUris = {
  "http://creativecommons.org/publicdomain/mark/1.0/",
  "http://creativecommons.org/publicdomain/zero/1.0/",
  "http://creativecommons.org/licenses/by/3.0/",
  "http://creativecommons.org/licenses/by-nc/3.0/",
  "http://creativecommons.org/licenses/by-nc-nd/3.0/",
  "urn:wls:license:by-nc-nd-sa",
  "http://creativecommons.org/licenses/by-nc-sa/3.0/",
  "http://creativecommons.org/licenses/by-nd/3.0/",
  "urn:wls:license:by-nd-sa",
  "http://creativecommons.org/licenses/by-sa/3.0/",
  "urn:wls:license:arr",
  "urn:wls:license:nl",
};

constexpr std::array<std::string_view, kDesignationCount> kLabels = {
  "Public Domain Mark 1.0",
  "CC0 1.0",
  "CC BY 3.0",
  "CC BY-NC 3.0",
  "CC BY-NC-ND 3.0",
  "BY-NC-ND-SA (composite, non-standard)",
  "CC BY-NC-SA 3.0",
  "CC BY-ND 3.0",
  "BY-ND-SA (composite, non-standard)",
  "CC BY-SA 3.0",
  "All Rights Reserved",
  "No License",
};

std::string to_lower(std::string_view s)
{
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool iequals(std::string_view a, std::string_view b)
{
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](unsigned char x, unsigned char y) {
           return std::tolower(x) == std::tolower(y);
         });
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f'; }

std::string_view trim(std::string_view s)
{
  while (!s.empty() && is_space(s.front()))
    s.remove_prefix(1);
  while (!s.empty() && is_space(s.back()))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_nonempty(std::string_view s, auto is_sep)
{
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_sep(s[i]))
      ++i;
    auto start = i;
    while (i < s.size() && !is_sep(s[i]))
      ++i;
    if (i > start)
      out.push_back(s.substr(start, i - start));
  }
  return out;
}

bool is_version(std::string_view s)
{
  if (s.empty() || !std::isdigit(static_cast<unsigned char>(s.front())) ||
      !std::isdigit(static_cast<unsigned char>(s.back())))
    return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) || c == '.'; }) &&
         s.find("..") == std::string_view::npos;
}

std::optional<Designation> cc_license_path(std::string_view segment)
{
  if (segment == "by") return Designation::BY;
  if (segment == "by-nc") return Designation::BY_NC;
  if (segment == "by-nd") return Designation::BY_ND;
  if (segment == "by-sa") return Designation::BY_SA;
  if (segment == "by-nc-nd" || segment == "by-nd-nc") return Designation::BY_NC_ND;
  if (segment == "by-nc-sa") return Designation::BY_NC_SA;
  return std::nullopt;
}

void append_utf8(std::string& out, std::uint32_t cp)
{
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

std::optional<std::uint32_t> numeric_reference(std::string_view body)
{
  // body excludes '&#' and ';'
  int base = 10;
  if (!body.empty() && (body.front() == 'x' || body.front() == 'X')) {
    base = 16;
    body.remove_prefix(1);
  }
  if (body.empty() || body.size() > 8)
    return std::nullopt;
  std::uint32_t cp = 0;
  for (unsigned char c : body) {
    int digit;
    if (std::isdigit(c))
      digit = c - '0';
    else if (base == 16 && std::isxdigit(c))
      digit = std::tolower(c) - 'a' + 10;
    else
      return std::nullopt;
    cp = cp * base + digit;
  }
  if (cp == 0 || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
    return std::nullopt;
  return cp;
}

// --- restricted XHTML scanner ---------------------------------------------

constexpr std::array<std::string_view, 12> kVoidElements = {
  "area", "base", "br", "col", "hr", "img", "input", "link", "meta", "param", "source", "wbr",
};

bool is_name_char(char c)
{
  return std::isalnum(static_cast<unsigned char>(c)) || c == ':' || c == '_' || c == '-' ||
         c == '.';
}

struct Attribute {
  std::string_view name;
  std::string value;
};

struct OpenElement {
  std::string_view name;
  std::size_t offset;
  bool captures_title = false;
  bool captures_name = false;
  std::string text;
};

class FragmentScanner {
public:
  explicit FragmentScanner(std::string_view input) : in_(input) {}

  LicenseDocument run()
  {
    if (in_.substr(0, 3) == "\xEF\xBB\xBF")
      pos_ = 3;

    while (pos_ < in_.size()) {
      if (in_[pos_] != '<') {
        auto end = in_.find('<', pos_);
        if (end == std::string_view::npos)
          end = in_.size();
        add_text(xml_unescape(in_.substr(pos_, end - pos_)));
        pos_ = end;
      } else if (starts_with("<!--")) {
        skip_past("-->", "unterminated comment");
      } else if (starts_with("<![CDATA[")) {
        const auto start = pos_;
        auto end = in_.find("]]>", pos_ + 9);
        if (end == std::string_view::npos)
          throw ParseError(start, "unterminated CDATA section");
        add_text(std::string(in_.substr(pos_ + 9, end - pos_ - 9)));
        pos_ = end + 3;
      } else if (starts_with("<!") || starts_with("<?")) {
        skip_past(">", "unterminated declaration");
      } else if (starts_with("</")) {
        close_tag();
      } else {
        open_tag();
      }
    }

    if (!stack_.empty())
      throw ParseError(stack_.back().offset, "unclosed <" + std::string(stack_.back().name) + ">");
    if (!license_uri_)
      throw MissingLicense();

    LicenseDocument doc;
    doc.designation = designation_from_uri(*license_uri_);
    doc.license_uri = *license_uri_;
    doc.work_uri = std::move(work_uri_);
    doc.title = std::move(title_);
    doc.attribution_name = std::move(attribution_name_);
    doc.attribution_url = std::move(attribution_url_);
    doc.raw_fragment = std::string(in_);
    return doc;
  }

private:
  bool starts_with(std::string_view prefix) const { return in_.substr(pos_, prefix.size()) == prefix; }

  void skip_past(std::string_view terminator, const char* message)
  {
    auto end = in_.find(terminator, pos_ + 2);
    if (end == std::string_view::npos)
      throw ParseError(pos_, message);
    pos_ = end + terminator.size();
  }

  void skip_space()
  {
    while (pos_ < in_.size() && is_space(in_[pos_]))
      ++pos_;
  }

  std::string_view read_name()
  {
    auto start = pos_;
    while (pos_ < in_.size() && is_name_char(in_[pos_]))
      ++pos_;
    return in_.substr(start, pos_ - start);
  }

  void add_text(const std::string& text)
  {
    for (auto& e : stack_) {
      if (e.captures_title || e.captures_name)
        e.text += text;
    }
  }

  void close_tag()
  {
    const auto start = pos_;
    pos_ += 2;
    auto name = read_name();
    skip_space();
    if (pos_ >= in_.size() || in_[pos_] != '>')
      throw ParseError(start, "malformed end tag");
    ++pos_;
    if (std::any_of(kVoidElements.begin(), kVoidElements.end(),
                    [&](std::string_view v) { return iequals(v, name); }))
      return;
    if (stack_.empty() || !iequals(stack_.back().name, name))
      throw ParseError(start, "unbalanced end tag </" + std::string(name) + ">");
    finish(stack_.back());
    stack_.pop_back();
  }

  void open_tag()
  {
    const auto start = pos_;
    ++pos_;
    auto name = read_name();
    if (name.empty())
      throw ParseError(start, "invalid tag");

    std::vector<Attribute> attrs;
    bool self_closing = false;
    while (true) {
      skip_space();
      if (pos_ >= in_.size())
        throw ParseError(start, "unterminated tag <" + std::string(name) + ">");
      if (in_[pos_] == '>') {
        ++pos_;
        break;
      }
      if (starts_with("/>")) {
        pos_ += 2;
        self_closing = true;
        break;
      }
      const auto attr_start = pos_;
      while (pos_ < in_.size() && !is_space(in_[pos_]) && in_[pos_] != '=' && in_[pos_] != '>' &&
             in_[pos_] != '/' && in_[pos_] != '"' && in_[pos_] != '\'' && in_[pos_] != '<')
        ++pos_;
      auto attr_name = in_.substr(attr_start, pos_ - attr_start);
      if (attr_name.empty())
        throw ParseError(attr_start, "invalid attribute");
      skip_space();
      std::string value;
      if (pos_ < in_.size() && in_[pos_] == '=') {
        ++pos_;
        skip_space();
        if (pos_ >= in_.size())
          throw ParseError(attr_start, "unterminated attribute");
        const char quote = in_[pos_];
        if (quote == '"' || quote == '\'') {
          auto end = in_.find(quote, pos_ + 1);
          if (end == std::string_view::npos)
            throw ParseError(attr_start, "unterminated attribute value");
          value = xml_unescape(in_.substr(pos_ + 1, end - pos_ - 1));
          pos_ = end + 1;
        } else {
          auto value_start = pos_;
          while (pos_ < in_.size() && !is_space(in_[pos_]) && in_[pos_] != '>' &&
                 in_[pos_] != '<' && !starts_with("/>"))
            ++pos_;
          if (pos_ == value_start)
            throw ParseError(attr_start, "missing attribute value");
          value = xml_unescape(in_.substr(value_start, pos_ - value_start));
        }
      }
      attrs.push_back({attr_name, std::move(value)});
    }

    const bool is_void = std::any_of(kVoidElements.begin(), kVoidElements.end(),
                                     [&](std::string_view v) { return iequals(v, name); });
    OpenElement element{name, start, false, false, {}};
    inspect(element, attrs);
    if (self_closing || is_void)
      finish(element);
    else
      stack_.push_back(std::move(element));
    seen_element_ = true;
  }

  static const std::string* find(const std::vector<Attribute>& attrs, std::string_view name)
  {
    for (const auto& a : attrs) {
      if (iequals(a.name, name))
        return &a.value;
    }
    return nullptr;
  }

  static bool has_token(const std::string* list, std::string_view token)
  {
    if (!list)
      return false;
    auto tokens = split_nonempty(*list, is_space);
    return std::any_of(tokens.begin(), tokens.end(),
                       [&](std::string_view t) { return t == token; });
  }

  void inspect(OpenElement& element, const std::vector<Attribute>& attrs)
  {
    if (!seen_element_ && stack_.empty()) {
      if (const auto* about = find(attrs, "about"))
        work_uri_ = *about;
    }

    const auto* rel = find(attrs, "rel");
    const auto* href = find(attrs, "href");
    if (href && !license_uri_ && (has_token(rel, "license") || has_token(rel, "cc:license")))
      license_uri_ = *href;
    if (href && !attribution_url_ && has_token(rel, "cc:attributionURL"))
      attribution_url_ = *href;

    const auto* property = find(attrs, "property");
    const auto* content = find(attrs, "content");
    if (has_token(property, "dc:title") && !title_) {
      if (content)
        title_ = *content;
      else
        element.captures_title = true;
    }
    if (has_token(property, "cc:attributionName") && !attribution_name_) {
      if (content)
        attribution_name_ = *content;
      else
        element.captures_name = true;
    }
  }

  void finish(OpenElement& element)
  {
    if (element.captures_title && !title_)
      title_ = element.text;
    if (element.captures_name && !attribution_name_)
      attribution_name_ = element.text;
  }

  std::string_view in_;
  std::size_t pos_ = 0;
  bool seen_element_ = false;
  std::vector<OpenElement> stack_;
  std::optional<std::string> license_uri_;
  std::optional<std::string> work_uri_;
  std::optional<std::string> title_;
  std::optional<std::string> attribution_name_;
  std::optional<std::string> attribution_url_;
};

}  // namespace

LicenseDocument LicenseDocument::for_designation(Designation d)
{
  LicenseDocument doc;
  doc.designation = d;
  doc.license_uri = std::string(canonical_uri(d));
  return doc;
}

bool LicenseDocument::same_content(const LicenseDocument& other) const
{
  return designation == other.designation && license_uri == other.license_uri &&
         work_uri == other.work_uri && title == other.title &&
         attribution_name == other.attribution_name && attribution_url == other.attribution_url;
}

std::string_view canonical_uri(Designation d) noexcept { return kUris[index_of(d)]; }

std::string_view label(Designation d) noexcept { return kLabels[index_of(d)]; }

Designation designation_from_uri(std::string_view uri)
{
  const auto lowered = to_lower(trim(uri));
  std::string_view s = lowered;

  constexpr std::string_view urn = "urn:wls:license:";
  if (s.substr(0, urn.size()) == urn) {
    s.remove_prefix(urn.size());
    for (auto d : kAllDesignations) {
      if (to_lower(code(d)) == s)
        return d;
    }
    throw UnknownLicenseUri(std::string(uri));
  }

  for (std::string_view scheme : {"http://", "https://", "//"}) {
    if (s.substr(0, scheme.size()) == scheme) {
      s.remove_prefix(scheme.size());
      break;
    }
  }
  s = s.substr(0, std::min(s.find('?'), s.find('#')));

  auto segments = split_nonempty(s, [](char c) { return c == '/'; });
  if (segments.size() < 4 || segments.size() > 6 ||
      (segments[0] != "creativecommons.org" && segments[0] != "www.creativecommons.org") ||
      !is_version(segments[3]))
    throw UnknownLicenseUri(std::string(uri));

  if (segments[1] == "licenses") {
    if (auto d = cc_license_path(segments[2]))
      return *d;
  } else if (segments[1] == "publicdomain") {
    if (segments[2] == "zero")
      return Designation::CC0;
    if (segments[2] == "mark")
      return Designation::PD;
  }
  throw UnknownLicenseUri(std::string(uri));
}

LicenseDocument parse_ccrel(std::string_view fragment) { return FragmentScanner(fragment).run(); }

std::string emit_ccrel(const LicenseDocument& doc)
{
  std::string out(kDivOpen);
  if (doc.work_uri)
    out.append(" about=\"").append(xml_escape(*doc.work_uri)).append("\"");
  out += ">\n";

  if (doc.title)
    out.append("<span property=\"dc:title\">").append(xml_escape(*doc.title)).append("</span>");
  else
    out += "This work";

  if (is_cc_license(doc.designation)) {
    const auto& name = doc.attribution_name;
    const auto& url = doc.attribution_url;
    if (name && url) {
      out.append(" by <a rel=\"cc:attributionURL\" property=\"cc:attributionName\" href=\"")
        .append(xml_escape(*url))
        .append("\">")
        .append(xml_escape(*name))
        .append("</a>");
    } else if (name) {
      out.append(" by <span property=\"cc:attributionName\">")
        .append(xml_escape(*name))
        .append("</span>");
    } else if (url) {
      out.append(" by <a rel=\"cc:attributionURL\" href=\"")
        .append(xml_escape(*url))
        .append("\">")
        .append(xml_escape(*url))
        .append("</a>");
    }
  }

  out.append(" is licensed under <a rel=\"license\" href=\"")
    .append(xml_escape(doc.license_uri))
    .append("\">")
    .append(label(doc.designation))
    .append("</a>.\n</div>\n");
  return out;
}

std::string emit_incompatible_ccrel()
{
  std::string out(kDivOpen);
  out += ">\nThis combination is incompatible (X).\n</div>\n";
  return out;
}

std::string xml_escape(std::string_view text)
{
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
    case '&': out += "&amp;"; break;
    case '<': out += "&lt;"; break;
    case '>': out += "&gt;"; break;
    case '"': out += "&quot;"; break;
    default: out += c;
    }
  }
  return out;
}

std::string xml_unescape(std::string_view text)
{
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '&') {
      out += text[i++];
      continue;
    }
    const auto semi = text.find(';', i + 1);
    if (semi == std::string_view::npos || semi - i > 12) {
      out += text[i++];
      continue;
    }
    const auto entity = text.substr(i + 1, semi - i - 1);
    if (entity == "amp") out += '&';
    else if (entity == "lt") out += '<';
    else if (entity == "gt") out += '>';
    else if (entity == "quot") out += '"';
    else if (entity == "apos") out += '\'';
    else if (!entity.empty() && entity.front() == '#') {
      if (auto cp = numeric_reference(entity.substr(1)))
        append_utf8(out, *cp);
      else {
        out += text[i++];
        continue;
      }
    } else {
      out += text[i++];
      continue;
    }
    i = semi + 1;
  }
  return out;
}

}  // namespace wls
