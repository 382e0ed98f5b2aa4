#include "qduality/csv.hpp"

#include <charconv>
#include <fstream>

namespace qduality {

const char* const kCampaignCsvHeader =
    "d,sample_id,seed,rank,c_hs,c_wy,c_l1,s_l_iota,s_vn_iota,upsilon,omega,"
    "p_hs_l,p_hs_vn,p_l1,bound_pop_hs,bound_pop_wy,"
    "slack_tohs_l,slack_tohs_vn,slack_heub,slack_heub2,slack_cpl1,pass_all";

const char* const kWernerCsvHeader =
    "d,w,a,seed,rank,c_hs,c_wy,c_l1,s_l_iota,s_vn_iota,upsilon,omega,"
    "p_hs_l,p_hs_vn,p_l1,bound_pop_hs,bound_pop_wy,"
    "slack_tohs_l,slack_tohs_vn,slack_heub,slack_heub2,slack_cpl1,pass_all";

const char* const kAxiomCsvHeader = "measure,axiom,d,trials,checks,violations,worst_slack,params";

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

namespace {

void append_quantifiers(std::string& out, const StateQuantifiers& q) {
    const double vals[] = {q.c_hs,    q.c_wy,    q.c_l1,         q.s_l_iota,
                           q.s_vn_iota, q.upsilon, q.omega,        q.p_hs_l,
                           q.p_hs_vn, q.p_l1,    q.bound_pop_hs, q.bound_pop_wy,
                           q.slack_tohs_l, q.slack_tohs_vn, q.slack_heub,
                           q.slack_heub2,  q.slack_cpl1};
    for (double v : vals) {
        out += ',';
        out += format_double(v);
    }
    out += ',';
    out += q.pass_all ? '1' : '0';
    out += '\n';
}

}  // namespace

std::string campaign_csv(std::span<const TradeoffRecord> records) {
    std::string out = kCampaignCsvHeader;
    out += '\n';
    for (const TradeoffRecord& r : records) {
        out += std::to_string(r.d);
        out += ',';
        out += std::to_string(r.sample_id);
        out += ',';
        out += std::to_string(r.stream_seed);
        out += ',';
        out += std::to_string(r.rank);
        append_quantifiers(out, r.q);
    }
    return out;
}

std::string werner_csv(std::span<const WernerRecord> records) {
    std::string out = kWernerCsvHeader;
    out += '\n';
    for (const WernerRecord& r : records) {
        out += "4,";
        out += format_double(r.w);
        out += ',';
        out += format_double(r.a);
        out += ",0,0";
        append_quantifiers(out, r.q);
    }
    return out;
}

std::string axiom_csv(std::span<const AxiomReport> reports) {
    std::string out = kAxiomCsvHeader;
    out += '\n';
    for (const AxiomReport& r : reports) {
        out += r.measure;
        out += ',';
        out += r.axiom;
        out += ',';
        out += std::to_string(r.d);
        out += ',';
        out += std::to_string(r.trials);
        out += ',';
        out += std::to_string(r.checks);
        out += ',';
        out += std::to_string(r.violations);
        out += ',';
        out += format_double(r.worst_slack);
        out += ',';
        out += r.params;
        out += '\n';
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& contents) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for writing: " + path);
    f << contents;
    f.flush();
    if (!f) throw IoError("write failed: " + path);
}

}  // namespace qduality
