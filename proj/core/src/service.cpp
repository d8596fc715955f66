#include "wls/service.hpp"

#include <json.hpp>

#include "wls/ccrel.hpp"

namespace wls {

namespace {

using json = nlohmann::ordered_json;

Response json_response(int status, const json& body)
{
  return {status, "application/json", body.dump(2) + "\n"};
}

Response error_response(int status, json body) { return json_response(status, body); }

json layer_failure(const std::string& layer, std::string_view error, const std::string& detail)
{
  return json{{"error", error}, {"layer", layer}, {"detail", detail}};
}

}  // namespace

Response handle_get_capabilities(const WlsConfig& config)
{
  json layers = json::array();
  for (const auto& layer : config.layers) {
    json entry{{"name", layer.name}};
    try {
      const auto doc = read_layer_license(layer);
      entry["designation"] = code(doc.designation);
      entry["licenseUri"] = canonical_uri(doc.designation);
    } catch (const Error& e) {
      entry["error"] = e.what();
    }
    layers.push_back(std::move(entry));
  }

  json body{
    {"service", "WLS"},
    {"title", config.server.title},
    {"version", kProtocolVersion},
    {"requests", {"GetCapabilities", "GetLicense"}},
    {"engines", {"matrix", "or"}},
    {"modes", {"raw", "symmetrized"}},
    {"formats", {mime_type(ResponseFormat::Xhtml), "application/json", "text/plain"}},
    {"layers", std::move(layers)},
  };
  return json_response(200, body);
}

Response handle_get_license(const WlsConfig& config, const WlsRequest& request)
{
  std::vector<Designation> designations;
  designations.reserve(request.layers.size());

  for (const auto& name : request.layers) {
    const auto* layer = config.find_layer(name);
    if (!layer)
      return error_response(404, json{{"error", "UnknownLayer"}, {"layer", name}});
    try {
      designations.push_back(read_layer_license(*layer).designation);
    } catch (const SidecarParseError& e) {
      return error_response(500, layer_failure(name, "BadLicenseDocument", e.what()));
    } catch (const ResolutionError& e) {
      return error_response(500, layer_failure(name, "UnresolvableLayer", e.what()));
    } catch (const Error& e) {
      return error_response(500, layer_failure(name, "LicenseUnreadable", e.what()));
    }
  }

  const auto result = combine_all(designations, request.engine, request.mode);

  switch (request.format) {
  case ResponseFormat::Text:
    return {200, std::string(mime_type(ResponseFormat::Text)), std::string(result.code())};

  case ResponseFormat::Xhtml: {
    std::string body;
    if (result.is_compatible()) {
      auto doc = LicenseDocument::for_designation(result.designation());
      std::string title;
      for (const auto& name : request.layers)
        title += (title.empty() ? "" : ",") + name;
      doc.title = std::move(title);
      body = emit_ccrel(doc);
    } else {
      body = emit_incompatible_ccrel();
    }
    return {200, std::string(mime_type(ResponseFormat::Xhtml)), std::move(body)};
  }

  case ResponseFormat::Json: break;
  }

  json layers = json::array();
  for (std::size_t i = 0; i < designations.size(); ++i)
    layers.push_back({{"name", request.layers[i]}, {"designation", code(designations[i])}});

  json body{{"compatible", result.is_compatible()}, {"designation", result.code()}};
  if (result.is_compatible())
    body["licenseUri"] = canonical_uri(result.designation());
  else
    body["licenseUri"] = nullptr;
  body["layers"] = std::move(layers);
  body["engine"] = to_string(request.engine);
  body["mode"] = to_string(request.mode);
  return json_response(200, body);
}

Response handle_query(const WlsConfig& config, std::string_view query)
{
  WlsRequest request;
  try {
    request = parse_query(query);
  } catch (const RequestError& e) {
    json body{{"error", e.code_name()}};
    if (!e.parameter().empty())
      body["parameter"] = e.parameter();
    if (e.code() == RequestError::Code::InvalidParameterValue)
      body["value"] = e.value();
    body["detail"] = e.what();
    return error_response(400, body);
  }

  if (request.kind == RequestKind::GetCapabilities)
    return handle_get_capabilities(config);
  return handle_get_license(config, request);
}

}  // namespace wls
