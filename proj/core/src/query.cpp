#include "wls/query.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

namespace wls {

namespace {

std::string upper(std::string_view s)
{
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

int hex_value(char c)
{
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::optional<ResponseFormat> format_from_string(std::string_view text)
{
  if (text == "application/xhtml+xml" || text == "xhtml")
    return ResponseFormat::Xhtml;
  if (text == "application/json" || text == "json")
    return ResponseFormat::Json;
  if (text == "text/plain" || text == "text")
    return ResponseFormat::Text;
  return std::nullopt;
}

[[noreturn]] void invalid_value(std::string name, std::string value)
{
  auto message = "invalid value '" + value + "' for parameter " + name;
  throw RequestError(RequestError::Code::InvalidParameterValue, std::move(name), std::move(value),
                     message);
}

}  // namespace

std::string_view mime_type(ResponseFormat f) noexcept
{
  switch (f) {
  case ResponseFormat::Xhtml: return "application/xhtml+xml";
  case ResponseFormat::Json: return "application/json";
  case ResponseFormat::Text: return "text/plain; charset=utf-8";
  }
  return "application/octet-stream";
}

std::string_view RequestError::code_name() const noexcept
{
  switch (code_) {
  case Code::InvalidService: return "InvalidService";
  case Code::InvalidRequest: return "InvalidRequest";
  case Code::MissingParameter: return "MissingParameter";
  case Code::InvalidParameterValue: return "InvalidParameterValue";
  }
  return "Error";
}

std::string percent_decode(std::string_view text)
{
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '+') {
      out += ' ';
    } else if (c == '%' && i + 2 < text.size() && hex_value(text[i + 1]) >= 0 &&
               hex_value(text[i + 2]) >= 0) {
      out += static_cast<char>(hex_value(text[i + 1]) * 16 + hex_value(text[i + 2]));
      i += 2;
    } else {
      out += c;
    }
  }
  return out;
}

WlsRequest parse_query(std::string_view query)
{
  if (!query.empty() && query.front() == '?')
    query.remove_prefix(1);

  std::map<std::string, std::string> params;
  std::size_t pos = 0;
  while (pos <= query.size()) {
    auto end = query.find('&', pos);
    if (end == std::string_view::npos)
      end = query.size();
    const auto pair = query.substr(pos, end - pos);
    pos = end + 1;
    if (pair.empty())
      continue;
    const auto eq = pair.find('=');
    auto name = upper(percent_decode(pair.substr(0, eq)));
    auto value = eq == std::string_view::npos ? std::string{} : percent_decode(pair.substr(eq + 1));
    params.emplace(std::move(name), std::move(value));
  }

  auto get = [&](const char* name) -> const std::string* {
    auto it = params.find(name);
    return it == params.end() ? nullptr : &it->second;
  };

  const auto* service = get("SERVICE");
  if (!service)
    throw RequestError(RequestError::Code::InvalidService, "SERVICE", "",
                       "missing SERVICE parameter (expected WLS)");
  if (upper(*service) != "WLS")
    throw RequestError(RequestError::Code::InvalidService, "SERVICE", *service,
                       "unsupported service '" + *service + "' (expected WLS)");

  WlsRequest request;
  const auto* kind = get("REQUEST");
  if (!kind)
    throw RequestError(RequestError::Code::InvalidRequest, "REQUEST", "",
                       "missing REQUEST parameter");
  const auto kind_upper = upper(*kind);
  if (kind_upper == "GETCAPABILITIES")
    request.kind = RequestKind::GetCapabilities;
  else if (kind_upper == "GETLICENSE")
    request.kind = RequestKind::GetLicense;
  else
    throw RequestError(RequestError::Code::InvalidRequest, "REQUEST", *kind,
                       "unknown request '" + *kind + "'");

  if (const auto* format = get("FORMAT")) {
    auto f = format_from_string(*format);
    if (!f)
      invalid_value("FORMAT", *format);
    request.format = *f;
  }
  if (const auto* engine = get("ENGINE")) {
    auto e = engine_from_string(*engine);
    if (!e)
      invalid_value("ENGINE", *engine);
    request.engine = *e;
  }
  if (const auto* mode = get("MODE")) {
    auto m = mode_from_string(*mode);
    if (!m)
      invalid_value("MODE", *mode);
    request.mode = *m;
  }

  if (request.kind == RequestKind::GetLicense) {
    const auto* layers = get("LAYERS");
    if (!layers || layers->empty())
      throw RequestError(RequestError::Code::MissingParameter, "LAYERS", "",
                         "GetLicense requires the LAYERS parameter");
    std::size_t start = 0;
    while (true) {
      const auto comma = layers->find(',', start);
      auto name = layers->substr(start, comma == std::string::npos ? comma : comma - start);
      if (name.empty())
        invalid_value("LAYERS", *layers);
      request.layers.push_back(std::move(name));
      if (comma == std::string::npos)
        break;
      start = comma + 1;
    }
  }
  return request;
}

}  // namespace wls
