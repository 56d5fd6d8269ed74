#include "towers/towers.h"

#include <fstream>
#include <new>
#include <string>

#include "towers/checks.hpp"
#include "towers/errors.hpp"

struct tw_report {
  towers::Document doc;
  std::string json;
};

namespace {

thread_local std::string last_error;

tw_status fail(tw_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
tw_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const towers::DegreeCapError& e) {
    return fail(TW_ERR_DEGREE_CAP, e.what());
  } catch (const towers::UsageError& e) {
    return fail(TW_ERR_ARGUMENT, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(TW_ERR_ARGUMENT, e.what());
  } catch (const towers::ComputationError& e) {
    return fail(TW_ERR_COMPUTATION, e.what());
  } catch (const std::bad_alloc&) {
    return fail(TW_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TW_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TW_ERR_INTERNAL, "unknown error");
  }
}

std::string or_default(const char* s, const char* fallback) { return s ? s : fallback; }

}  // namespace

extern "C" {

const char* tw_version(void) { return "1.0.0"; }

const char* tw_last_error(void) { return last_error.c_str(); }

tw_status tw_check(const tw_check_request* req, tw_report** out) {
  return guarded([&] {
    if (!req || !out || !req->tower || !req->check) return fail(TW_ERR_ARGUMENT, "tower and check are required");
    *out = nullptr;
    towers::CheckRequest r;
    r.tower = req->tower;
    r.check = req->check;
    r.group = or_default(req->group, "g0");
    r.route = or_default(req->route, "auto");
    r.max_degree = req->max_degree;
    r.negative_control = req->negative_control != 0;
    r.timing = req->timing != 0;
    auto* rep = new tw_report{towers::to_document(towers::run_check(r)), {}};
    rep->json = rep->doc.json_text();
    *out = rep;
    return TW_OK;
  });
}

tw_status tw_table(const tw_table_request* req, tw_report** out) {
  return guarded([&] {
    if (!req || !out || !req->tower || !req->op) return fail(TW_ERR_ARGUMENT, "tower and op are required");
    if (req->degree_count && !req->degrees) return fail(TW_ERR_ARGUMENT, "degrees pointer is null");
    *out = nullptr;
    towers::TableRequest r;
    r.tower = req->tower;
    r.op = req->op;
    r.group = or_default(req->group, "g0");
    r.route = or_default(req->route, "auto");
    r.degrees.assign(req->degrees, req->degrees + req->degree_count);
    r.composition = or_default(req->composition, "");
    auto* rep = new tw_report{towers::run_table(r), {}};
    rep->json = rep->doc.json_text();
    *out = rep;
    return TW_OK;
  });
}

int tw_report_passed(const tw_report* r) { return r && r->doc.passed ? 1 : 0; }

const char* tw_report_json(const tw_report* r) { return r ? r->json.c_str() : ""; }

const char* tw_report_csv(const tw_report* r) { return r ? r->doc.csv.c_str() : ""; }

tw_status tw_report_write(const tw_report* r, const char* format, const char* path) {
  return guarded([&] {
    if (!r || !format || !path) return fail(TW_ERR_ARGUMENT, "report, format and path are required");
    const std::string f = format;
    if (f != "json" && f != "csv") return fail(TW_ERR_ARGUMENT, "format must be json or csv");
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) return fail(TW_ERR_IO, std::string("cannot open ") + path);
    os << (f == "json" ? r->json : r->doc.csv);
    os.flush();
    if (!os) return fail(TW_ERR_IO, std::string("write failed: ") + path);
    return TW_OK;
  });
}

void tw_report_free(tw_report* r) { delete r; }

}  // extern "C"
