#include "goodsets/goodsets.h"

#include "goodsets/goodness.hpp"
#include "goodsets/report.hpp"

#include <cstring>
#include <new>
#include <string>

struct gs_instance {
  goodsets::Instance value;
};

namespace {

thread_local std::string last_error;

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) {
    throw std::bad_alloc();
  }
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

gs_status fail(gs_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

/// Maps the library's exception types onto status codes.
template <typename F>
gs_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return GS_OK;
  } catch (const goodsets::ParseError& e) {
    return fail(GS_ERR_PARSE, e.what());
  } catch (const goodsets::PreconditionError& e) {
    return fail(GS_ERR_PRECONDITION, e.what());
  } catch (const goodsets::InternalError& e) {
    return fail(GS_ERR_INTERNAL, std::string("internal error: ") + e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(GS_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(GS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GS_ERR_IO, e.what());
  }
}

goodsets::CommandOptions parse_options(const char* options_json) {
  goodsets::CommandOptions options;
  if (!options_json || !*options_json) {
    return options;
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(options_json);
  } catch (const nlohmann::json::exception& e) {
    throw goodsets::ParseError(std::string("malformed options: ") + e.what());
  }
  if (!doc.is_object()) {
    throw goodsets::ParseError("options must be a JSON object");
  }
  for (const auto& [key, value] : doc.items()) {
    if (key == "from" || key == "to") {
      if (!value.is_number_unsigned()) {
        throw goodsets::ParseError("\"" + key + "\" must be a non-negative point index");
      }
      (key == "from" ? options.from : options.to) = value.get<std::size_t>();
    } else if (key == "method") {
      options.method = value.get<std::string>();
    } else if (key == "pins") {
      if (!value.is_null()) {
        options.pins = value.get<std::string>();
      }
    } else if (key == "timing") {
      options.timing = value.get<bool>();
    } else if (key == "verify") {
      options.verify = value.get<bool>();
    } else {
      throw goodsets::ParseError("unknown option \"" + key + "\"");
    }
  }
  return options;
}

} // namespace

extern "C" {

const char* gs_version(void) {
  return "0.1.0";
}

const char* gs_last_error(void) {
  return last_error.c_str();
}

const char* gs_status_name(gs_status status) {
  switch (status) {
  case GS_OK:
    return "ok";
  case GS_ERR_USAGE:
    return "usage error";
  case GS_ERR_PRECONDITION:
    return "precondition violated";
  case GS_ERR_PARSE:
    return "parse error";
  case GS_ERR_INTERNAL:
    return "internal error";
  case GS_ERR_IO:
    return "i/o error";
  }
  return "unknown status";
}

gs_status gs_instance_parse(const char* json_text, gs_instance** out) {
  if (!json_text || !out) {
    return fail(GS_ERR_USAGE, "gs_instance_parse: null argument");
  }
  *out = nullptr;
  return guarded([&] { *out = new gs_instance{goodsets::parse_instance(json_text)}; });
}

gs_status gs_instance_load(const char* path, gs_instance** out) {
  if (!path || !out) {
    return fail(GS_ERR_USAGE, "gs_instance_load: null argument");
  }
  *out = nullptr;
  return guarded([&] { *out = new gs_instance{goodsets::load_instance(path)}; });
}

void gs_instance_free(gs_instance* instance) {
  delete instance;
}

gs_status gs_instance_point_count(const gs_instance* instance, size_t* out) {
  if (!instance || !out) {
    return fail(GS_ERR_USAGE, "gs_instance_point_count: null argument");
  }
  *out = instance->value.points.size();
  return GS_OK;
}

gs_status gs_instance_arity(const gs_instance* instance, size_t* out) {
  if (!instance || !out) {
    return fail(GS_ERR_USAGE, "gs_instance_arity: null argument");
  }
  *out = instance->value.space->arity();
  return GS_OK;
}

gs_status gs_instance_to_json(const gs_instance* instance, char** out) {
  if (!instance || !out) {
    return fail(GS_ERR_USAGE, "gs_instance_to_json: null argument");
  }
  *out = nullptr;
  return guarded([&] { *out = duplicate(goodsets::to_json(instance->value).dump(2)); });
}

gs_status gs_is_good(const gs_instance* instance, int* good) {
  if (!instance || !good) {
    return fail(GS_ERR_USAGE, "gs_is_good: null argument");
  }
  return guarded([&] { *good = goodsets::is_good(instance->value.points).good ? 1 : 0; });
}

gs_status gs_is_full(const gs_instance* instance, int* full) {
  if (!instance || !full) {
    return fail(GS_ERR_USAGE, "gs_is_full: null argument");
  }
  return guarded([&] { *full = goodsets::is_full(instance->value.points) ? 1 : 0; });
}

gs_status gs_deficiency(const gs_instance* instance, long* out) {
  if (!instance || !out) {
    return fail(GS_ERR_USAGE, "gs_deficiency: null argument");
  }
  return guarded([&] { *out = goodsets::deficiency(instance->value.points); });
}

gs_status gs_run(const gs_instance* instance, const char* command, const char* options_json, char** report_json) {
  if (!instance || !command || !report_json) {
    return fail(GS_ERR_USAGE, "gs_run: null argument");
  }
  *report_json = nullptr;
  return guarded([&] {
    const goodsets::CommandOptions options = parse_options(options_json);
    const nlohmann::json report = goodsets::run_command(instance->value, command, options);
    *report_json = duplicate(report.dump(2));
  });
}

gs_status gs_emit_examples(const char* dir, size_t* count) {
  if (!dir) {
    return fail(GS_ERR_USAGE, "gs_emit_examples: null argument");
  }
  return guarded([&] {
    const auto written = goodsets::write_examples(dir);
    if (count) {
      *count = written.size();
    }
  });
}

void gs_string_free(char* s) {
  std::free(s);
}

} // extern "C"
