from pirasim.domain.exceptions.cannot_advance_buffer_for_unknown_video_exception import (
    CannotAdvanceBufferForUnknownVideoException,
)
from pirasim.domain.exceptions.cannot_advance_buffer_with_non_positive_throughput_exception import (
    CannotAdvanceBufferWithNonPositiveThroughputException,
)
from pirasim.domain.exceptions.cannot_advance_prefetch_for_viewed_video_exception import (
    CannotAdvancePrefetchForViewedVideoException,
)
from pirasim.domain.exceptions.cannot_compute_qoe_with_non_positive_watch_duration_exception import (
    CannotComputeQoeWithNonPositiveWatchDurationException,
)
from pirasim.domain.exceptions.cannot_compute_traffic_cost_for_unknown_pan_cdn_exception import (
    CannotComputeTrafficCostForUnknownPanCdnException,
)
from pirasim.domain.exceptions.cannot_create_buffer_ledger_with_negative_buffer_exception import (
    CannotCreateBufferLedgerWithNegativeBufferException,
)
from pirasim.domain.exceptions.cannot_create_buffer_ledger_with_non_positive_cap_exception import (
    CannotCreateBufferLedgerWithNonPositiveCapException,
)
from pirasim.domain.exceptions.cannot_create_media_list_with_duplicate_video_ids_exception import (
    CannotCreateMediaListWithDuplicateVideoIdsException,
)
from pirasim.domain.exceptions.cannot_create_media_list_with_mismatched_watch_durations_exception import (
    CannotCreateMediaListWithMismatchedWatchDurationsException,
)
from pirasim.domain.exceptions.cannot_create_media_list_with_non_positive_watch_duration_exception import (
    CannotCreateMediaListWithNonPositiveWatchDurationException,
)
from pirasim.domain.exceptions.cannot_create_media_list_with_out_of_range_index_exception import (
    CannotCreateMediaListWithOutOfRangeIndexException,
)
from pirasim.domain.exceptions.cannot_create_pan_cdn_catalog_with_duplicate_ids_exception import (
    CannotCreatePanCdnCatalogWithDuplicateIdsException,
)
from pirasim.domain.exceptions.cannot_create_pan_cdn_catalog_without_classes_exception import (
    CannotCreatePanCdnCatalogWithoutClassesException,
)
from pirasim.domain.exceptions.cannot_create_pan_cdn_class_with_invalid_id_exception import (
    CannotCreatePanCdnClassWithInvalidIdException,
)
from pirasim.domain.exceptions.cannot_create_pan_cdn_class_with_negative_cost_exception import (
    CannotCreatePanCdnClassWithNegativeCostException,
)
from pirasim.domain.exceptions.cannot_create_planning_config_with_invalid_fields_exception import (
    CannotCreatePlanningConfigWithInvalidFieldsException,
)
from pirasim.domain.exceptions.cannot_create_predictor_config_with_invalid_fields_exception import (
    CannotCreatePredictorConfigWithInvalidFieldsException,
)
from pirasim.domain.exceptions.cannot_create_production_config_with_invalid_margin_exception import (
    CannotCreateProductionConfigWithInvalidMarginException,
)
from pirasim.domain.exceptions.cannot_create_qoe_params_with_invalid_weights_exception import (
    CannotCreateQoeParamsWithInvalidWeightsException,
)
from pirasim.domain.exceptions.cannot_create_range_decision_exceeding_chunk_duration_exception import (
    CannotCreateRangeDecisionExceedingChunkDurationException,
)
from pirasim.domain.exceptions.cannot_create_range_decision_for_uncached_pan_cdn_exception import (
    CannotCreateRangeDecisionForUncachedPanCdnException,
)
from pirasim.domain.exceptions.cannot_create_range_decision_with_non_positive_range_exception import (
    CannotCreateRangeDecisionWithNonPositiveRangeException,
)
from pirasim.domain.exceptions.cannot_create_synth_config_with_invalid_fields_exception import (
    CannotCreateSynthConfigWithInvalidFieldsException,
)
from pirasim.domain.exceptions.cannot_create_throughput_sample_with_non_positive_rate_exception import (
    CannotCreateThroughputSampleWithNonPositiveRateException,
)
from pirasim.domain.exceptions.cannot_create_throughput_trace_with_invalid_samples_exception import (
    CannotCreateThroughputTraceWithInvalidSamplesException,
)
from pirasim.domain.exceptions.cannot_create_video_spec_with_empty_cache_set_exception import (
    CannotCreateVideoSpecWithEmptyCacheSetException,
)
from pirasim.domain.exceptions.cannot_create_video_spec_with_non_positive_bitrate_exception import (
    CannotCreateVideoSpecWithNonPositiveBitrateException,
)
from pirasim.domain.exceptions.cannot_create_video_spec_with_non_positive_chunk_duration_exception import (
    CannotCreateVideoSpecWithNonPositiveChunkDurationException,
)
from pirasim.domain.exceptions.cannot_create_video_spec_with_non_positive_duration_exception import (
    CannotCreateVideoSpecWithNonPositiveDurationException,
)
from pirasim.domain.exceptions.cannot_create_workload_config_with_invalid_fields_exception import (
    CannotCreateWorkloadConfigWithInvalidFieldsException,
)
from pirasim.domain.exceptions.cannot_download_range_beyond_trace_exception import (
    CannotDownloadRangeBeyondTraceException,
)
from pirasim.domain.exceptions.cannot_load_config_with_invalid_value_exception import (
    CannotLoadConfigWithInvalidValueException,
)
from pirasim.domain.exceptions.cannot_load_config_with_unknown_key_exception import (
    CannotLoadConfigWithUnknownKeyException,
)
from pirasim.domain.exceptions.cannot_parse_trace_file_exception import (
    CannotParseTraceFileException,
)
from pirasim.domain.exceptions.cannot_parse_workload_file_exception import (
    CannotParseWorkloadFileException,
)
from pirasim.domain.exceptions.cannot_plan_without_download_target_exception import (
    CannotPlanWithoutDownloadTargetException,
)
from pirasim.domain.exceptions.cannot_predict_switch_to_same_pan_cdn_exception import (
    CannotPredictSwitchToSamePanCdnException,
)
from pirasim.domain.exceptions.cannot_predict_throughput_without_samples_exception import (
    CannotPredictThroughputWithoutSamplesException,
)
from pirasim.domain.exceptions.cannot_prune_empty_pan_cdn_candidates_exception import (
    CannotPruneEmptyPanCdnCandidatesException,
)
from pirasim.domain.exceptions.cannot_record_throughput_sample_out_of_order_exception import (
    CannotRecordThroughputSampleOutOfOrderException,
)
from pirasim.domain.exceptions.cannot_run_infeasible_strategy_exception import (
    CannotRunInfeasibleStrategyException,
)
from pirasim.domain.exceptions.domain_exception import DomainException

__all__ = [
    "DomainException",
    "CannotCreatePanCdnClassWithNegativeCostException",
    "CannotCreatePanCdnClassWithInvalidIdException",
    "CannotCreatePanCdnCatalogWithoutClassesException",
    "CannotCreatePanCdnCatalogWithDuplicateIdsException",
    "CannotCreateVideoSpecWithNonPositiveDurationException",
    "CannotCreateVideoSpecWithNonPositiveBitrateException",
    "CannotCreateVideoSpecWithNonPositiveChunkDurationException",
    "CannotCreateVideoSpecWithEmptyCacheSetException",
    "CannotCreateMediaListWithNonPositiveWatchDurationException",
    "CannotCreateMediaListWithMismatchedWatchDurationsException",
    "CannotCreateMediaListWithOutOfRangeIndexException",
    "CannotCreateMediaListWithDuplicateVideoIdsException",
    "CannotCreateRangeDecisionWithNonPositiveRangeException",
    "CannotCreateRangeDecisionExceedingChunkDurationException",
    "CannotCreateRangeDecisionForUncachedPanCdnException",
    "CannotCreateBufferLedgerWithNegativeBufferException",
    "CannotCreateBufferLedgerWithNonPositiveCapException",
    "CannotCreateQoeParamsWithInvalidWeightsException",
    "CannotAdvanceBufferWithNonPositiveThroughputException",
    "CannotAdvanceBufferForUnknownVideoException",
    "CannotAdvancePrefetchForViewedVideoException",
    "CannotComputeQoeWithNonPositiveWatchDurationException",
    "CannotComputeTrafficCostForUnknownPanCdnException",
    "CannotCreateThroughputSampleWithNonPositiveRateException",
    "CannotRecordThroughputSampleOutOfOrderException",
    "CannotPredictThroughputWithoutSamplesException",
    "CannotPredictSwitchToSamePanCdnException",
    "CannotCreatePredictorConfigWithInvalidFieldsException",
    "CannotCreatePlanningConfigWithInvalidFieldsException",
    "CannotPruneEmptyPanCdnCandidatesException",
    "CannotPlanWithoutDownloadTargetException",
    "CannotCreateProductionConfigWithInvalidMarginException",
    "CannotCreateThroughputTraceWithInvalidSamplesException",
    "CannotDownloadRangeBeyondTraceException",
    "CannotRunInfeasibleStrategyException",
    "CannotParseTraceFileException",
    "CannotParseWorkloadFileException",
    "CannotCreateSynthConfigWithInvalidFieldsException",
    "CannotCreateWorkloadConfigWithInvalidFieldsException",
    "CannotLoadConfigWithUnknownKeyException",
    "CannotLoadConfigWithInvalidValueException",
]
