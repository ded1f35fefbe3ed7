/* agdalache.h - exported call surface.
 *
 * Self-contained: depends on <stdint.h> only.  All functions use the
 * platform C calling convention and may be called from any foreign
 * thread; al_init/al_exit are externally serialized by the caller.
 *
 * Handles are opaque non-zero tokens; 0 is the null handle, so handle
 * storage may be zero-initialized.  Futures are passed as a
 * caller-owned array of exactly 2 handles: slot 0 interrupts, slot 1
 * resolves.
 *
 * Status codes (stable across versions):
 *   0   OK / Completed
 *   1   Interrupted (getters) / "first parameter is odd" (increment)
 *   2   "second parameter is odd"
 *   100 null handle
 *   101 stale handle
 *   102 runtime not initialized
 *
 * al_future_try_put_interrupt returns 1 if it filled the interrupt
 * cell, 0 if the cell was already filled, or a negated status code
 * (-100/-101) for bad handles; it ALWAYS frees the handle it is given
 * (except the null case, where there is nothing to free).
 *
 * al_error_message returns static immutable storage: do NOT free.
 */

#ifndef AGDALACHE_H
#define AGDALACHE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef void* AlHandle;            /* 0 is null */
void     al_init(void);
void     al_exit(void);
AlHandle ec_init_app(void);
int32_t  ec_increment(AlHandle app, int64_t delta, int64_t* out);
int32_t  ec_read(AlHandle app, int64_t* out);
int32_t  ec_increase_async(AlHandle app, int32_t duration_s, AlHandle future_out[2]);
int32_t  al_future_get_int(AlHandle future[2], int64_t* out);
int32_t  al_future_get_unit(AlHandle future[2]);
int32_t  al_future_get_ptr(AlHandle future[2], void** out);
int32_t  al_future_try_put_interrupt(AlHandle interrupt_handle);
int32_t  al_handle_free(AlHandle h);
const char* al_error_message(int32_t code);

/* Full-call interruption baseline used by the bench CLI; observationally
 * equivalent to al_future_try_put_interrupt(future[0]) + bookkeeping. */
int32_t  ec_interrupt_full(AlHandle future[2]);

#ifdef __cplusplus
}
#endif

#endif /* AGDALACHE_H */
