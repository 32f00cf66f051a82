#ifndef HHKIT_H
#define HHKIT_H

/* C interface to the Hochschild cohomology toolkit.
 *
 * A job is described by a JSON object (see the README for the schema) and
 * produces a report carrying a status, a plain-text rendering, and a
 * machine-readable JSON document.  All computation is exact; statuses:
 *   HHK_OK            computation finished, every asserted check passed
 *   HHK_INPUT_ERROR   malformed job or input document
 *   HHK_VERIFY_FAILED a verification assertion failed (details in the text)
 *
 * Handles are freed with the matching *_free function; accessor strings stay
 * valid until the owning handle is freed.  Handles are not thread-safe;
 * distinct handles may be used from distinct threads.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    HHK_OK = 0,
    HHK_INPUT_ERROR = 2,
    HHK_VERIFY_FAILED = 3
} hhk_status;

typedef struct hhk_job hhk_job;
typedef struct hhk_report hhk_report;

/* Parses a job description.  On failure returns HHK_INPUT_ERROR and leaves
 * *out NULL; hhk_last_error() describes the problem. */
hhk_status hhk_job_parse(const char* spec_json, hhk_job** out);

/* Runs the job.  Always produces a report unless allocation fails; the
 * report's own status records verification failures. */
hhk_status hhk_job_run(const hhk_job* job, hhk_report** out);

hhk_status hhk_report_status(const hhk_report* report);
const char* hhk_report_text(const hhk_report* report);
const char* hhk_report_json(const hhk_report* report);

void hhk_job_free(hhk_job* job);
void hhk_report_free(hhk_report* report);

/* Last error message of the calling thread, empty string when none. */
const char* hhk_last_error(void);

const char* hhk_version(void);

#ifdef __cplusplus
}
#endif

#endif /* HHKIT_H */
