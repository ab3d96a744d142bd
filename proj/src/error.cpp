#include "testforge/error.hpp"

namespace testforge {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::schema_error: return "schema_error";
    case Errc::invariant_error: return "invariant_error";
    case Errc::selector_parse_error: return "selector_parse_error";
    case Errc::empty_document: return "empty_document";
    case Errc::invalid_base_url: return "invalid_base_url";
    case Errc::unknown_element: return "unknown_element";
    case Errc::precondition: return "precondition";
    case Errc::storage_error: return "storage_error";
    case Errc::empty_store: return "empty_store";
    case Errc::provider_timeout: return "provider_timeout";
    case Errc::malformed_provider_output: return "malformed_provider_output";
    case Errc::attempts_exhausted: return "attempts_exhausted";
    case Errc::not_owner: return "not_owner";
    case Errc::terminal_job: return "terminal_job";
    case Errc::session_dead: return "session_dead";
    case Errc::invalid_model: return "invalid_model";
    case Errc::ambiguous_selector: return "ambiguous_selector";
    case Errc::element_not_found: return "element_not_found";
    case Errc::readonly_element: return "readonly_element";
    case Errc::not_a_page: return "not_a_page";
    case Errc::bad_credentials: return "bad_credentials";
    case Errc::protocol_error: return "protocol_error";
    case Errc::http_timeout: return "http_timeout";
    case Errc::webdriver_error: return "webdriver_error";
    case Errc::unmappable_description: return "unmappable_description";
    case Errc::rate_limited: return "rate_limited";
    case Errc::undecomposable_goal: return "undecomposable_goal";
    case Errc::io_error: return "io_error";
  }
  return "unknown";
}

}  // namespace testforge
